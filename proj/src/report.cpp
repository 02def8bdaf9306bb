#include "meshkit/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace meshkit {

void VerificationReport::add_row(CountRow row, std::optional<Permutation> witness) {
  if (!row.pass) {
    pass = false;
    if (!counterexample && witness) counterexample = std::move(witness);
  }
  rows.push_back(row);
}

void VerificationReport::add_check(CheckResult check) {
  if (!check.pass) {
    pass = false;
    if (!counterexample && check.counterexample) counterexample = check.counterexample;
  }
  checks.push_back(std::move(check));
}

bool VerificationReport::same_outcome(const VerificationReport& other) const {
  return suite == other.suite && n_max == other.n_max && rows == other.rows && checks == other.checks &&
         pass == other.pass && counterexample == other.counterexample;
}

std::string format_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << " (n <= " << r.n_max << ")\n";
  if (!r.rows.empty()) {
    const std::string lhs = r.lhs_label.empty() ? "lhs" : r.lhs_label;
    const std::string rhs = r.rhs_label.empty() ? "rhs" : r.rhs_label;
    const int w = static_cast<int>(std::max<std::size_t>({lhs.size(), rhs.size(), 10}));
    std::size_t lw = 0;
    for (const auto& row : r.rows) lw = std::max(lw, row.label.size());
    const int lwi = static_cast<int>(lw);
    out << "  " << std::left << std::setw(lwi) << "" << std::right << (lw ? "  " : "") << std::setw(3) << "n" << "  "
        << std::setw(w) << lhs << "  " << std::setw(w) << rhs << "  ok\n";
    for (const auto& row : r.rows) {
      out << "  " << std::left << std::setw(lwi) << row.label << std::right << (lw ? "  " : "") << std::setw(3) << row.n << "  " << std::setw(w) << row.lhs << "  " << std::setw(w) << row.rhs
          << "  " << (row.pass ? "yes" : "NO") << "\n";
    }
  }
  for (const auto& c : r.checks) {
    out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    if (c.counterexample) out << " (counterexample " << c.counterexample->str() << ")";
    out << "\n";
  }
  out << (r.pass ? "PASS " : "FAIL ") << r.suite << " in " << r.elapsed.count() << " ms";
  if (r.counterexample) out << ", first counterexample " << r.counterexample->str();
  out << "\n";
  return out.str();
}

std::string format_json_lines(const VerificationReport& r) {
  using nlohmann::json;
  std::string out;
  for (const auto& row : r.rows) {
    json j = {{"suite", r.suite}, {"n", row.n}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"pass", row.pass}};
    if (!row.label.empty()) j["label"] = row.label;
    out += j.dump() + "\n";
  }
  for (const auto& c : r.checks) {
    json j = {{"suite", r.suite}, {"check", c.name}, {"pass", c.pass}, {"detail", c.detail}};
    if (c.counterexample) j["counterexample"] = c.counterexample->str();
    out += j.dump() + "\n";
  }
  json summary = {{"suite", r.suite}, {"pass", r.pass}, {"n_max", r.n_max}, {"elapsed_ms", r.elapsed.count()}};
  if (r.counterexample) summary["counterexample"] = r.counterexample->str();
  out += summary.dump() + "\n";
  return out;
}

}  // namespace meshkit
