#pragma once

// Exhaustive verification suites. Each suite compares two descriptions of a
// permutation class on every length up to n_max, scanning lengths in order
// and permutations lexicographically, so the first reported counterexample is
// the smallest one. Reports do not depend on the worker count.

#include "meshkit/pattern.hpp"
#include "meshkit/report.hpp"
#include "meshkit/sort_ops.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace meshkit {

/// 2(3n)! / ((n+1)! (2n+1)!), exact for n <= 12.
std::uint64_t west2_count(int n);

/// {p : S(p) = id} against Av(basis); basis defaults to fixture KNUTH.
VerificationReport verify_knuth(int n_max = 8, unsigned workers = 1,
                                std::optional<std::vector<Pattern>> basis = std::nullopt);
/// {p : S^2(p) = id} against Av(WEST2), the closed-form counts, and the
/// barred reading of 35'241 against its mesh form.
VerificationReport verify_west2(int n_max = 8, unsigned workers = 1);
/// {p : S^3(p) = id} against Av(W3_BASIS).
VerificationReport verify_west3(int n_max = 9, unsigned workers = 1);
/// The 29 intermediate patterns against S^3 = id, and the containment
/// implications used to shrink them to the final basis.
VerificationReport verify_w3_stages(int n_max = 8, unsigned workers = 1);
/// S(p) contains 2341 iff p contains one of I1..I5; every occurrence of 2341
/// in S(p) pulls back to exactly one I pattern (up to `occurrence_n_max`).
VerificationReport verify_lemma_I(int n_max = 8, unsigned workers = 1, int occurrence_n_max = 7);
/// p contains J3 implies S(p) contains W2; marked and mesh forms of J3 agree.
VerificationReport verify_lemma_j3(int n_max = 8, unsigned workers = 1);
/// is_simple against avoidance of the symmetric closure of the generators.
VerificationReport verify_simple(int n_max = 8, unsigned workers = 1);
/// {p : B(p) = id} against Av(231, 321) and Av(BUBBLE_ID), and
/// B^-1(Av(1243)) against Av(BUBBLE_1243).
VerificationReport verify_bubble(int n_max = 8, unsigned workers = 1);
/// Derived preimage bases for every target of length <= 3 under both
/// operators, plus the 231, 2341 and 1243 reconstructions.
VerificationReport verify_preimage(int n_max = 8, unsigned workers = 1);
/// expand_marks against its input for every fixture carrying marks.
VerificationReport verify_expand(int n_max = 7, unsigned workers = 1);
/// Small avoidance equivalences: a shading that can be dropped, and the
/// marked and classical forms of the bubble-sortable basis.
VerificationReport verify_equivalences(int n_max = 8, unsigned workers = 1);
/// Passes-to-sort counts for the stack operator; k = 1 and k = 2 checked
/// against Catalan numbers and the closed form.
VerificationReport verify_counts(int n_max = 9, unsigned workers = 1);

/// counts[k-1][n-1] = |{p in S_n : op^k(p) = id}| for 1 <= k <= k_max.
struct CountTable {
  SortOperator op = SortOperator::Stack;
  int k_max = 0;
  int n_max = 0;
  std::vector<std::vector<std::uint64_t>> counts;
  std::uint64_t at(int k, int n) const {
    return counts[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(n - 1)];
  }
};

CountTable count_table(SortOperator op, int k_max, int n_max, unsigned workers = 1);
std::string format_count_table(const CountTable& t);

struct SuiteInfo {
  std::string name;
  int default_n_max;
  std::string summary;
  std::function<VerificationReport(int n_max, unsigned workers)> run;
};

/// Registered suites in the order "verify all" runs them.
const std::vector<SuiteInfo>& suites();
/// Throws std::invalid_argument for an unknown name.
const SuiteInfo& find_suite(std::string_view name);

}  // namespace meshkit
