#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "symsums/scalar.hpp"

namespace symsums {
namespace {

// boost cpp_int reads a leading 0 as an octal prefix; digit runs coming from
// the grammar are always decimal.
BigInt decimal_digits(const std::string& digits) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string::npos) return 0;
  return BigInt(digits.substr(first));
}

// Recursive-descent scanner over the scalar grammar:
//   expr   := ['-'|'+'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number | "sqrt" '(' integer ')'
//   number := integer ['.' digits] | integer '/' digits
// The rational domain accepts a single signed number only; surd and approx
// accept the full expression. sqrt arguments must be square-free and > 1 in
// the surd domain; approx evaluates sqrt numerically for any integer > 0.
struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_spaces() {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  }

  bool at_end() {
    skip_spaces();
    return pos >= text.size();
  }

  char peek() {
    skip_spaces();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

  std::string digits() {
    skip_spaces();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a digit");
    return std::string(text.substr(start, pos - start));
  }

  // Decimal literal or fraction, with an optional sign already consumed by
  // the caller. "2.1" becomes 21/10; "p/q" requires a positive integer q.
  Rational number(bool negative) {
    std::string integral = digits();
    Rational value;
    if (pos < text.size() && text[pos] == '.') {
      ++pos;
      std::string frac = digits();
      BigInt num = decimal_digits(integral + frac);
      BigInt den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      value = Rational(num, den);
    } else if (pos < text.size() && text[pos] == '/') {
      ++pos;
      std::size_t den_pos = pos;
      BigInt den = decimal_digits(digits());
      if (den == 0) throw ParseError("fraction denominator must be positive", den_pos);
      value = Rational(decimal_digits(integral), den);
    } else {
      value = Rational(decimal_digits(integral));
    }
    return negative ? Rational(-value) : value;
  }

  std::int64_t sqrt_argument() {
    skip_spaces();
    if (!consume('(')) fail("expected '(' after sqrt");
    std::string arg = digits();
    if (arg.size() > 18) fail("sqrt argument too large");
    if (!consume(')')) fail("expected ')'");
    return std::stoll(arg);
  }
};

// add/mul let the surd domain widen the ring while a single literal is being
// assembled (that union becomes the value's ring parameter).
template <typename Number, typename MakeRational, typename MakeSqrt, typename Add,
          typename Mul>
Number parse_expression(Scanner& sc, MakeRational make_rational, MakeSqrt make_sqrt, Add add,
                        Mul mul) {
  auto parse_factor = [&](bool negative) -> Number {
    if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      return make_rational(sc.number(negative));
    }
    if (sc.text.substr(sc.pos).starts_with("sqrt")) {
      sc.pos += 4;
      Number v = make_sqrt(sc.sqrt_argument(), sc);
      return negative ? Number(-v) : v;
    }
    sc.fail("expected a number or sqrt(...)");
  };
  auto parse_term = [&](bool negative) -> Number {
    Number value = parse_factor(negative);
    while (sc.consume('*')) value = mul(value, parse_factor(false));
    return value;
  };

  bool negative = false;
  if (sc.consume('-'))
    negative = true;
  else
    sc.consume('+');
  Number value = parse_term(negative);
  while (!sc.at_end()) {
    if (sc.consume('+'))
      value = add(value, parse_term(false));
    else if (sc.consume('-'))
      value = add(value, parse_term(true));
    else
      sc.fail("expected '+', '-' or end of input");
  }
  return value;
}

Surd in_union(const Surd& a, const Surd& b, Surd (*op)(const Surd&, const Surd&)) {
  const auto ring = Surd::union_radicands(a, b);
  return op(a.embedded_in(ring), b.embedded_in(ring));
}

} // namespace

Rational parse_rational(std::string_view text) {
  Scanner sc{text};
  bool negative = false;
  if (sc.consume('-'))
    negative = true;
  else
    sc.consume('+');
  if (!std::isdigit(static_cast<unsigned char>(sc.peek()))) {
    if (sc.text.substr(sc.pos).starts_with("sqrt"))
      sc.fail("surd syntax is not valid in the rational domain");
    sc.fail("expected a number");
  }
  Rational value = sc.number(negative);
  if (!sc.at_end()) sc.fail("unexpected trailing input in the rational domain");
  return value;
}

Surd parse_surd(std::string_view text) {
  Scanner sc{text};
  return parse_expression<Surd>(
      sc, [](Rational q) { return Surd(std::move(q)); },
      [](std::int64_t m, Scanner& s) {
        if (m <= 1 || !Surd::is_square_free(m))
          throw ParseError("sqrt argument must be a square-free integer > 1, got " +
                               std::to_string(m),
                           s.pos);
        return Surd::sqrt_of(m);
      },
      [](const Surd& a, const Surd& b) {
        return in_union(a, b, [](const Surd& x, const Surd& y) { return x + y; });
      },
      [](const Surd& a, const Surd& b) {
        return in_union(a, b, [](const Surd& x, const Surd& y) { return x * y; });
      });
}

Approx parse_approx(std::string_view text, const ParseOptions& options) {
  Scanner sc{text};
  Approx value = parse_expression<Approx>(
      sc, [&](const Rational& q) { return Approx(to_double(q)); },
      [](std::int64_t m, Scanner& s) {
        if (m <= 0) throw ParseError("sqrt argument must be positive", s.pos);
        return Approx(std::sqrt(static_cast<double>(m)));
      },
      [](const Approx& a, const Approx& b) { return a + b; },
      [](const Approx& a, const Approx& b) { return a * b; });
  value.tolerance = options.tolerance;
  return value;
}

} // namespace symsums
