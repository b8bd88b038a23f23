#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symsums/appendix.hpp"
#include "symsums/io.hpp"
#include "symsums/magic.hpp"
#include "symsums/prouhet.hpp"
#include "symsums/reducer.hpp"
#include "symsums/verifier.hpp"

namespace {

using namespace symsums;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;

struct JobConfig {
  std::string command;
  std::string domain = "rational";
  std::string base_text;
  std::string shifts_text;
  std::string params_text; // magic: a,b,c,d,k1,k2
  std::string from_file;
  std::string cancel_text; // reduce: step-limited value list
  bool remove_zeros = true;
  bool remove_cross_pairs = true;
  bool thue_morse = false;
  bool check_distinct = false;
  bool show_params = false;
  int n = 0;
  int power = 0; // blocks: 0 means every power
  int max_level = kDefaultMaxLevel;
  double tolerance = kDefaultTolerance;
  std::string format = "table";
  std::string output;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

void write_output(const JobConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + cfg.output);
  out << text;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
}

template <ScalarDomain S>
std::vector<S> parse_list(const std::string& text, const ParseOptions& options,
                          const char* what) {
  if (text.empty()) throw Error(std::string("missing ") + what);
  std::vector<S> out;
  for (const auto& cell : split(text, ','))
    out.push_back(ScalarTraits<S>::parse(cell, options));
  return out;
}

// Base grammar: left terms comma-separated, sides separated by ";".
template <ScalarDomain S>
BaseIdentity<S> parse_base(const std::string& text, const ParseOptions& options) {
  if (text.empty()) throw Error("missing --base");
  const auto sides = split(text, ';');
  if (sides.size() != 2) throw Error("--base needs exactly two sides separated by ';'");
  BaseIdentity<S> base;
  base.left = parse_list<S>(sides[0], options, "--base left side");
  base.right = parse_list<S>(sides[1], options, "--base right side");
  if (base.left.size() != base.right.size())
    throw Error("--base sides must have the same number of terms");
  return base;
}

template <ScalarDomain S>
SolutionPair<S> build_pair(const JobConfig& cfg, const ParseOptions& options) {
  if (!cfg.from_file.empty()) return pair_from_json<S>(load_json_file(cfg.from_file), options);
  auto base = parse_base<S>(cfg.base_text, options);
  auto shifts = parse_list<S>(cfg.shifts_text, options, "--shifts");
  return generate(std::move(base), std::move(shifts), cfg.max_level);
}

std::string render_report(const JobConfig& cfg, const VerificationReport& report) {
  if (cfg.format == "json") return to_json(report).dump(2) + "\n";
  if (cfg.format == "csv") return report_to_csv(report);
  return report_to_table(report);
}

int finish_report(const JobConfig& cfg, const VerificationReport& report) {
  write_output(cfg, render_report(cfg, report));
  return report.pass ? kExitPass : kExitVerificationFailure;
}

template <ScalarDomain S>
int run_generate(const JobConfig& cfg, const ParseOptions& options) {
  const auto pair = build_pair<S>(cfg, options);
  if (cfg.format == "json") {
    Json j = to_json(pair);
    if constexpr (!ScalarTraits<S>::exact) j["tolerance"] = cfg.tolerance;
    write_output(cfg, j.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    write_output(cfg, pair_to_csv(pair));
  } else {
    std::ostringstream out;
    out << "level " << pair.level << ", N = " << pair.base_width() << ", domain "
        << ScalarTraits<S>::name << "\n";
    out << pair_to_csv(pair);
    write_output(cfg, out.str());
  }
  return kExitPass;
}

template <ScalarDomain S>
int run_verify(const JobConfig& cfg, const ParseOptions& options) {
  if (!cfg.from_file.empty()) {
    const auto sys = system_from_json<S>(load_json_file(cfg.from_file), options);
    return finish_report(cfg, verify_lists(sys.xs, sys.ys, sys.max_power));
  }
  const auto pair = build_pair<S>(cfg, options);
  return finish_report(cfg, verify_system(pair));
}

template <ScalarDomain S>
int run_pyramid(const JobConfig& cfg, const ParseOptions& options) {
  return finish_report(cfg, verify_pyramid(build_pair<S>(cfg, options)));
}

template <ScalarDomain S>
int run_blocks(const JobConfig& cfg, const ParseOptions& options) {
  const auto pair = build_pair<S>(cfg, options);
  return finish_report(cfg, cfg.power == 0 ? verify_blocks_all(pair)
                                           : verify_blocks(pair, cfg.power));
}

template <ScalarDomain S>
int run_reduce(const JobConfig& cfg, const ParseOptions& options) {
  const auto pair = build_pair<S>(cfg, options);
  ReducedIdentity<S> reduced;
  if (!cfg.cancel_text.empty()) {
    reduced = reduce_listed(pair, parse_list<S>(cfg.cancel_text, options, "--cancel"));
  } else {
    reduced = reduce(pair, ReduceOptions{cfg.remove_zeros, cfg.remove_cross_pairs});
  }
  if (cfg.format == "json") {
    write_output(cfg, to_json(reduced).dump(2) + "\n");
  } else if (cfg.format == "csv") {
    write_output(cfg, reduced_to_csv(reduced));
  } else {
    std::ostringstream out;
    out << "left  (" << reduced.left.size() << "):";
    for (const auto& v : reduced.left) out << ' ' << render(v);
    out << "\nright (" << reduced.right.size() << "):";
    for (const auto& v : reduced.right) out << ' ' << render(v);
    out << "\nremoved:";
    if (reduced.removed.empty()) out << " nothing";
    for (const auto& entry : reduced.removed)
      out << ' ' << render(entry.value) << "x" << entry.count << "(" << to_string(entry.reason)
          << ")";
    out << "\nsums (powers 1.." << reduced.max_power << "):";
    for (int m = 1; m <= reduced.max_power; ++m)
      out << ' ' << render(power_sum(reduced.left, static_cast<unsigned>(m)));
    out << '\n';
    write_output(cfg, out.str());
  }
  return kExitPass;
}

int run_prouhet(const JobConfig& cfg) {
  if (cfg.n < 1) throw Error("--n must be >= 1");
  const auto split_result = prouhet_split(cfg.n);
  std::optional<std::string> params_note;
  if (cfg.show_params) {
    auto [base, shifts] = prouhet_params(cfg.n);
    std::string note = "base 1,4;2,3 shifts";
    for (const auto& k : shifts) note += ' ' + render(k);
    params_note = std::move(note);
  }
  if (cfg.format == "json") {
    Json j = to_json(split_result);
    if (params_note) j["params"] = *params_note;
    write_output(cfg, j.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    std::string out = "i,one,zero\n";
    for (std::size_t i = 0; i < split_result.ones.size(); ++i)
      out += std::to_string(i + 1) + ',' + std::to_string(split_result.ones[i]) + ',' +
             std::to_string(split_result.zeros[i]) + '\n';
    write_output(cfg, out);
  } else {
    std::ostringstream out;
    out << "ones :";
    for (auto v : split_result.ones) out << ' ' << v;
    out << "\nzeros:";
    for (auto v : split_result.zeros) out << ' ' << v;
    out << "\npowers 1.." << split_result.n << " verified\n";
    if (params_note) out << *params_note << '\n';
    write_output(cfg, out.str());
  }
  return kExitPass;
}

template <ScalarDomain S>
int run_magic(const JobConfig& cfg, const ParseOptions& options) {
  MagicSquare<S> square;
  if (cfg.thue_morse || cfg.params_text.empty()) {
    if constexpr (std::same_as<S, Rational>) {
      square = thue_morse_square();
    } else {
      throw Error("--thue-morse is a rational-domain square; drop --domain");
    }
  } else {
    auto params = parse_list<S>(cfg.params_text, options, "--params");
    if (params.size() != 6) throw Error("--params needs exactly six values: a,b,c,d,k1,k2");
    square = parametric_square(params[0], params[1], params[2], params[3], params[4],
                               params[5]);
  }
  const auto report = verify_magic(square);
  if (cfg.format == "json") {
    Json j = to_json(square);
    j["verification"] = to_json(report);
    if (cfg.check_distinct) j["distinct_entries"] = distinct_entries(square);
    write_output(cfg, j.dump(2) + "\n");
  } else if (cfg.format == "csv") {
    write_output(cfg, square_to_csv(square));
  } else {
    std::ostringstream out;
    out << square_to_text(square);
    if (cfg.check_distinct)
      out << "distinct entries: " << (distinct_entries(square) ? "yes" : "no") << '\n';
    out << render_report(cfg, report);
    write_output(cfg, out.str());
  }
  return report.pass ? kExitPass : kExitVerificationFailure;
}

template <ScalarDomain S>
int run_appendix_check(const JobConfig& cfg, const ParseOptions& options) {
  auto base = parse_base<S>(cfg.base_text, options);
  auto shifts = parse_list<S>(cfg.shifts_text, options, "--shifts");
  const auto equivalence = equivalence_check(base, shifts, cfg.max_level);

  // Subset construction under the documented mapping: letters translated by
  // k_1, subset values k_2..k_n.
  SubsetAssignment<S> assignment;
  assignment.a = base.left[0] + shifts[0];
  assignment.b = base.left[1] + shifts[0];
  assignment.c = base.right[0] + shifts[0];
  assignment.d = base.right[1] + shifts[0];
  assignment.ks.assign(shifts.begin() + 1, shifts.end());
  const auto subsets = subset_pair(assignment);
  const int max_power = static_cast<int>(assignment.ks.size()) + 1;
  const auto system = verify_lists(subsets.xs, subsets.ys, max_power);

  struct FRow {
    unsigned m;
    std::string direct, closed;
    bool pass;
  };
  std::vector<FRow> f_rows;
  bool f_pass = true;
  for (unsigned m = 0; m <= assignment.ks.size() + 1; ++m) {
    const S direct = f_direct(assignment.a, assignment.b, m, assignment.ks);
    const S closed = f_closed_form(assignment.a, assignment.b, m, assignment.ks);
    const bool pass = scalar_eq(direct, closed);
    f_pass = f_pass && pass;
    f_rows.push_back({m, render(direct), render(closed), pass});
  }

  const bool all_pass = equivalence.pass && system.pass && f_pass;
  if (cfg.format == "json") {
    Json j;
    j["domain"] = ScalarTraits<S>::name;
    j["X"] = scalars_to_json(subsets.xs);
    j["Y"] = scalars_to_json(subsets.ys);
    j["system"] = to_json(system);
    j["equivalence"] = to_json(equivalence);
    Json f = Json::array();
    for (const auto& row : f_rows) {
      Json r;
      r["m"] = row.m;
      r["direct"] = row.direct;
      r["closed_form"] = row.closed;
      r["pass"] = row.pass;
      f.push_back(std::move(r));
    }
    j["f_comparison"] = std::move(f);
    j["pass"] = all_pass;
    write_output(cfg, j.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << "X:";
    for (const auto& v : subsets.xs) out << ' ' << render(v);
    out << "\nY:";
    for (const auto& v : subsets.ys) out << ' ' << render(v);
    out << '\n' << report_to_table(system) << report_to_table(equivalence);
    out << "f(a,b) direct vs closed form\n";
    for (const auto& row : f_rows)
      out << "m=" << row.m << "  direct=" << row.direct << "  closed=" << row.closed << "  "
          << (row.pass ? "ok" : "MISMATCH") << '\n';
    write_output(cfg, out.str());
  }
  return all_pass ? kExitPass : kExitVerificationFailure;
}

template <ScalarDomain S>
int run_typed(const JobConfig& cfg) {
  ParseOptions options;
  options.tolerance = cfg.tolerance;
  if (cfg.command == "generate") return run_generate<S>(cfg, options);
  if (cfg.command == "verify") return run_verify<S>(cfg, options);
  if (cfg.command == "pyramid") return run_pyramid<S>(cfg, options);
  if (cfg.command == "blocks") return run_blocks<S>(cfg, options);
  if (cfg.command == "reduce") return run_reduce<S>(cfg, options);
  if (cfg.command == "magic") return run_magic<S>(cfg, options);
  if (cfg.command == "appendix-check") return run_appendix_check<S>(cfg, options);
  throw Error("unknown command: " + cfg.command);
}

int dispatch(JobConfig& cfg) {
  if (cfg.command.empty()) throw Error("no command given; see --help");
  if (cfg.command == "prouhet") return run_prouhet(cfg);

  // A data file names its own domain (and tolerance); those govern parsing.
  if (!cfg.from_file.empty()) {
    const Json j = load_json_file(cfg.from_file);
    if (j.contains("domain")) cfg.domain = j.at("domain").get<std::string>();
    if (j.contains("tolerance")) cfg.tolerance = j.at("tolerance").get<double>();
  }
  if (cfg.format != "table" && cfg.format != "json" && cfg.format != "csv")
    throw Error("unknown format: " + cfg.format);
  if (cfg.domain == "rational") return run_typed<Rational>(cfg);
  if (cfg.domain == "surd") return run_typed<Surd>(cfg);
  if (cfg.domain == "approx") return run_typed<Approx>(cfg);
  throw Error("unknown domain: " + cfg.domain + " (expected rational, surd or approx)");
}

std::optional<std::string> prescan_config_path(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
    if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
  }
  return std::nullopt;
}

void apply_env(JobConfig& cfg) {
  if (const char* domain = std::getenv("SYMSUMS_DOMAIN")) cfg.domain = domain;
  if (const char* tol = std::getenv("SYMSUMS_TOLERANCE")) cfg.tolerance = std::atof(tol);
}

void apply_config_file(JobConfig& cfg, const Json& j) {
  if (!j.is_object()) throw Error("config file must hold a JSON object");
  auto str = [&](const char* key, std::string& field) {
    if (j.contains(key)) field = j.at(key).get<std::string>();
  };
  auto boolean = [&](const char* key, bool& field) {
    if (j.contains(key)) field = j.at(key).get<bool>();
  };
  auto integer = [&](const char* key, int& field) {
    if (j.contains(key)) field = j.at(key).get<int>();
  };
  str("command", cfg.command);
  str("domain", cfg.domain);
  str("base", cfg.base_text);
  str("shifts", cfg.shifts_text);
  str("params", cfg.params_text);
  str("from-file", cfg.from_file);
  str("cancel", cfg.cancel_text);
  str("format", cfg.format);
  str("output", cfg.output);
  boolean("zeros", cfg.remove_zeros);
  boolean("cross-pairs", cfg.remove_cross_pairs);
  boolean("thue-morse", cfg.thue_morse);
  boolean("distinct", cfg.check_distinct);
  boolean("show-params", cfg.show_params);
  integer("n", cfg.n);
  integer("power", cfg.power);
  integer("max-level", cfg.max_level);
  if (j.contains("tolerance")) cfg.tolerance = j.at("tolerance").get<double>();
}

} // namespace

int main(int argc, char** argv) {
  JobConfig cfg;
  try {
    apply_env(cfg);
    if (const auto config_path = prescan_config_path(argc, argv))
      apply_config_file(cfg, load_json_file(*config_path));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  CLI::App app{"construct, verify, reduce and export symmetric power-sum systems"};
  app.require_subcommand(0, 1);
  std::string config_path_unused;
  app.add_option("--config", config_path_unused, "JSON config file (flags override it)");

  auto add_common = [&](CLI::App* sub, bool with_inputs) {
    sub->add_option("--config", config_path_unused, "JSON config file (flags override it)");
    sub->add_option("--domain", cfg.domain, "rational | surd | approx");
    sub->add_option("--format", cfg.format, "table | json | csv");
    sub->add_option("--output", cfg.output, "output path (default: stdout)");
    sub->add_option("--tolerance", cfg.tolerance, "relative tolerance, approx domain");
    if (with_inputs) {
      sub->add_option("--base", cfg.base_text, "base identity, e.g. \"-1,2.1;3.4,-2.3\"");
      sub->add_option("--shifts", cfg.shifts_text, "shift values, e.g. \"0,1,-0.5\"");
      sub->add_option("--max-level", cfg.max_level, "refuse more shifts than this");
    }
  };

  auto* generate_cmd = app.add_subcommand("generate", "build a solution pair");
  add_common(generate_cmd, true);
  auto* verify_cmd = app.add_subcommand("verify", "check the full power-sum system");
  add_common(verify_cmd, true);
  verify_cmd->add_option("--from-file", cfg.from_file, "pair JSON or {xs, ys, max_power}");
  auto* pyramid_cmd = app.add_subcommand("pyramid", "check prefix identities");
  add_common(pyramid_cmd, true);
  pyramid_cmd->add_option("--from-file", cfg.from_file, "pair JSON");
  auto* blocks_cmd = app.add_subcommand("blocks", "check block identities");
  add_common(blocks_cmd, true);
  blocks_cmd->add_option("--from-file", cfg.from_file, "pair JSON");
  blocks_cmd->add_option("--power", cfg.power, "single power m (default: all)");
  auto* reduce_cmd = app.add_subcommand("reduce", "delete zeros and cross-pairs");
  add_common(reduce_cmd, true);
  reduce_cmd->add_option("--from-file", cfg.from_file, "pair JSON");
  reduce_cmd->add_flag("--zeros,!--no-zeros", cfg.remove_zeros, "remove zeros (default on)");
  reduce_cmd->add_flag("--cross-pairs,!--no-cross-pairs", cfg.remove_cross_pairs,
                       "cancel values present on both sides (default on)");
  reduce_cmd->add_option("--cancel", cfg.cancel_text,
                         "step-limited mode: cancel exactly these values");
  auto* prouhet_cmd = app.add_subcommand("prouhet", "Thue-Morse split of 1..2^(n+1)");
  add_common(prouhet_cmd, false);
  prouhet_cmd->add_option("--n", cfg.n, "highest verified power")->required();
  prouhet_cmd->add_flag("--show-params", cfg.show_params,
                        "print the generator parameters of the split");
  auto* magic_cmd = app.add_subcommand("magic", "4x4 magic squares");
  add_common(magic_cmd, false);
  magic_cmd->add_flag("--thue-morse", cfg.thue_morse, "the classical 16-entry square");
  magic_cmd->add_option("--params", cfg.params_text, "a,b,c,d,k1,k2 with a+b = c+d");
  magic_cmd->add_flag("--distinct", cfg.check_distinct, "also report entry distinctness");
  auto* appendix_cmd =
      app.add_subcommand("appendix-check", "subset construction vs the generator");
  add_common(appendix_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    app.exit(e);
    return kExitInputError;
  }

  for (const auto* sub : {generate_cmd, verify_cmd, pyramid_cmd, blocks_cmd, reduce_cmd,
                          prouhet_cmd, magic_cmd, appendix_cmd}) {
    if (sub->parsed()) cfg.command = sub->get_name();
  }

  try {
    return dispatch(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}
