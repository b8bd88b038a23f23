#pragma once

#include <stdexcept>
#include <string>

namespace symsums {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed scalar text; carries the byte offset of the failure.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Value-domain violations: incompatible surd rings, bad radicands,
/// operations refused for the given domain.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A base identity whose two sides do not sum to the same value.
class BaseIdentityError : public Error {
public:
  BaseIdentityError(const std::string& left_sum, const std::string& right_sum)
      : Error("base identity violated: left sum = " + left_sum +
              ", right sum = " + right_sum),
        left_sum_(left_sum), right_sum_(right_sum) {}

  const std::string& left_sum() const { return left_sum_; }
  const std::string& right_sum() const { return right_sum_; }

private:
  std::string left_sum_, right_sum_;
};

/// Refused input: a size/level limit was exceeded.
class LimitError : public Error {
public:
  using Error::Error;
};

} // namespace symsums
