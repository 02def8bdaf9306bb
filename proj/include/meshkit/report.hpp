#pragma once

#include "meshkit/permutation.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace meshkit {

/// Sizes of the two sides of a set comparison at one length.
struct CountRow {
  /// Names the comparison when a suite runs several; may be empty.
  std::string label;
  int n = 0;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool pass = true;
  bool operator==(const CountRow&) const = default;
};

/// A named yes/no check inside a suite.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  std::optional<Permutation> counterexample;
  bool operator==(const CheckResult&) const = default;
};

struct VerificationReport {
  std::string suite;
  int n_max = 0;
  std::string lhs_label;
  std::string rhs_label;
  std::vector<CountRow> rows;
  std::vector<CheckResult> checks;
  bool pass = true;
  /// First (smallest) permutation witnessing a failure, if any.
  std::optional<Permutation> counterexample;
  std::chrono::milliseconds elapsed{0};

  void add_row(CountRow row, std::optional<Permutation> witness = std::nullopt);
  void add_check(CheckResult check);

  /// Whether rows and checks agree, ignoring timing.
  bool same_outcome(const VerificationReport& other) const;
};

/// Aligned table: one line per row and check plus a summary line.
std::string format_text(const VerificationReport& report);

/// One JSON object per line: {"suite","n","lhs","rhs","pass"[,"label"]} per row,
/// {"suite","check","pass","detail"[,"counterexample"]} per check, and a
/// closing {"suite","pass","n_max","elapsed_ms"[,"counterexample"]} summary.
std::string format_json_lines(const VerificationReport& report);

}  // namespace meshkit
