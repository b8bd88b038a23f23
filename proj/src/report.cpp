#include <algorithm>
#include <string>
#include <vector>

#include "symsums/io.hpp"
#include "symsums/report.hpp"

namespace symsums {

std::string report_to_table(const VerificationReport& report) {
  const std::vector<std::string> headers = {"power", "range", "left", "right", "residual", "ok"};
  std::vector<std::vector<std::string>> rows;
  rows.reserve(report.checks.size());
  for (const auto& rec : report.checks)
    rows.push_back({std::to_string(rec.power), rec.range, rec.left, rec.right, rec.residual,
                    rec.pass ? "yes" : "NO"});

  std::vector<std::size_t> widths(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) {
    widths[c] = headers[c].size();
    for (const auto& row : rows) widths[c] = std::max(widths[c], row[c].size());
  }
  auto emit_row = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c] + std::string(widths[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    return line + '\n';
  };

  std::string out = report.kind + " check: " + (report.pass ? "PASS" : "FAIL") + '\n';
  out += emit_row(headers);
  for (const auto& row : rows) out += emit_row(row);
  return out;
}

std::string report_to_csv(const VerificationReport& report) {
  std::string out = "power,range,left,right,residual,pass\n";
  for (const auto& rec : report.checks) {
    out += std::to_string(rec.power) + ',' + rec.range + ',' + rec.left + ',' + rec.right +
           ',' + rec.residual + ',' + (rec.pass ? "true" : "false") + '\n';
  }
  return out;
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["kind"] = report.kind;
  j["pass"] = report.pass;
  Json checks = Json::array();
  for (const auto& rec : report.checks) {
    Json c;
    c["power"] = rec.power;
    c["range"] = rec.range;
    c["left"] = rec.left;
    c["right"] = rec.right;
    c["residual"] = rec.residual;
    c["pass"] = rec.pass;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const ProuhetSplit& split) {
  Json j;
  j["n"] = split.n;
  j["length"] = split.ones.size() + split.zeros.size();
  j["ones"] = split.ones;
  j["zeros"] = split.zeros;
  j["verified_powers"] = split.n;
  return j;
}

} // namespace symsums
