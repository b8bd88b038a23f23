#pragma once

#include <string>
#include <vector>

namespace symsums {

struct CheckRecord {
  int power = 0;
  std::string range; // which slice of the system was compared
  std::string left;
  std::string right;
  std::string residual;
  bool pass = false;
};

/// One verification run. kind is "system", "pyramid", "blocks", "parity",
/// "recursive-vs-direct", "value-containment", "magic" or "equivalence";
/// overall pass means every record passed.
struct VerificationReport {
  std::string kind;
  bool pass = true;
  std::vector<CheckRecord> checks;

  void add(CheckRecord record) {
    pass = pass && record.pass;
    checks.push_back(std::move(record));
  }
};

// Rendering lives in src/report.cpp.
std::string report_to_table(const VerificationReport& report);
std::string report_to_csv(const VerificationReport& report);

} // namespace symsums
