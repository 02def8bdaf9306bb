// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails. Set MESHKIT_ACCEPT_N10=1 to also run the West-3 check at
// n = 10.

#include "oracles.hpp"
#include "properties.hpp"

#include "meshkit/dsl.hpp"
#include "meshkit/enumerate.hpp"
#include "meshkit/fixtures.hpp"
#include "meshkit/matcher.hpp"
#include "meshkit/preimage.hpp"
#include "meshkit/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace meshkit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void require(const VerificationReport& rep) {
    if (!rep.pass) {
      fail(rep.suite + " failed" + (rep.counterexample ? " at " + rep.counterexample->str() : std::string()));
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s));
  std::ostringstream line;
  line.precision(2);
  line << std::fixed << "AC" << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << secs << " s)";
  if (!o.detail.empty()) line << "  " << o.detail;
  std::cout << line.str() << std::endl;
  if (!o.pass) ++failures;
}

std::vector<std::uint64_t> lhs_counts(const VerificationReport& rep, const std::string& label = "") {
  std::vector<std::uint64_t> out;
  for (const auto& row : rep.rows) {
    if (row.label == label) out.push_back(row.lhs);
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "one stack pass sorts exactly Av(231), n <= 8", 5, [] {
    Outcome o;
    const auto rep = verify_knuth(8);
    o.require(rep);
    o.require(lhs_counts(rep) == std::vector<std::uint64_t>{1, 2, 5, 14, 42, 132, 429, 1430}, "Catalan counts");
    return o;
  });

  criterion(2, "two stack passes sort exactly Av(2341, 3241 mesh), closed-form counts, n <= 8", 30, [] {
    Outcome o;
    const auto rep = verify_west2(8);
    o.require(rep);
    std::vector<std::uint64_t> expect;
    for (int n = 1; n <= 8; ++n) expect.push_back(oracle::west2_by_factorials(n));
    o.require(expect == std::vector<std::uint64_t>{1, 2, 6, 22, 91, 408, 1938, 9614}, "formula oracle");
    o.require(lhs_counts(rep) == expect, "counts differ from the closed form");
    const std::vector<Pattern> literal{Pattern(Permutation{2, 3, 4, 1}), parse_pattern("3241|sh{(1,4)}")};
    o.require(fixture("WEST2") == literal, "WEST2 fixture differs from {2341, 3241|sh{(1,4)}}");
    return o;
  });

  criterion(3, "three stack passes sort exactly Av(W3_BASIS), n <= 9", 300, [] {
    Outcome o;
    o.require(verify_west3(9));
    return o;
  });

  if (const char* n10 = std::getenv("MESHKIT_ACCEPT_N10"); n10 && std::string(n10) == "1") {
    criterion(3, "three stack passes sort exactly Av(W3_BASIS), n = 10 (opt-in)", 0, [] {
      Outcome o;
      o.require(verify_west3(10, hardware_workers()));
      return o;
    });
  }

  criterion(4, "29 intermediate patterns give the West-3 set and all reductions hold, n <= 8", 600, [] {
    Outcome o;
    const auto rep = verify_w3_stages(8);
    o.require(rep);
    int implications = 0;
    for (const auto& c : rep.checks) implications += c.name.find(" => ") != std::string::npos;
    o.require(implications >= 24, "missing implication checks");
    return o;
  });

  criterion(5, "simple permutations are Av(simple basis), n <= 8", 0, [] {
    Outcome o;
    std::vector<std::uint64_t> oracle_counts;
    for (int n = 1; n <= 8; ++n) {
      std::uint64_t c = 0;
      for (const auto& w : oracle::all_permutations(n)) c += oracle::is_simple_by_windows(w);
      oracle_counts.push_back(c);
    }
    o.require(oracle_counts == std::vector<std::uint64_t>{1, 2, 0, 2, 6, 46, 338, 2926}, "interval oracle table");
    const auto rep = verify_simple(8);
    o.require(rep);
    o.require(lhs_counts(rep) == oracle_counts, "simple counts differ from the oracle");
    return o;
  });

  criterion(6, "bubble sort: B sorts Av(231,321); B^-1(Av(1243)) = Av(BUBBLE_1243), n <= 8", 0, [] {
    Outcome o;
    const auto rep = verify_bubble(8);
    o.require(rep);
    std::vector<std::uint64_t> powers;
    for (int n = 1; n <= 8; ++n) powers.push_back(std::uint64_t{1} << (n - 1));
    o.require(lhs_counts(rep, "B sorts = Av(231,321)") == powers, "counts are not 2^(n-1)");
    return o;
  });

  criterion(7, "preimage derivation for every target of length <= 3, and the 231 and 2341 bases", 0, [] {
    Outcome o;
    for (int k = 1; k <= 3; ++k) {
      for (const auto& w : avoidance_class(k, {}).members) {
        for (SortOperator op : {SortOperator::Stack, SortOperator::Bubble}) {
          o.require(preimage_verify(preimage_basis(op, Pattern(w)), 7));
        }
      }
    }
    const auto west = stack_preimage_basis(Pattern(Permutation{2, 3, 1}));
    o.require(equivalent_on(west.patterns, fixture("WEST2"), 8).equivalent, "231 basis vs WEST2");
    const auto ibasis = stack_preimage_basis(Pattern(Permutation{2, 3, 4, 1}));
    o.require(equivalent_on(ibasis.patterns, fixture("I_SET"), 8).equivalent, "2341 basis vs I_SET");
    o.require(equivalent_on(expand_marks(ibasis.patterns), fixture("I_SET"), 8).equivalent,
              "expanded 2341 basis vs I_SET");
    return o;
  });

  criterion(8, "equivalences: 3241 shadings, BUBBLE_ID vs {231,321}, n <= 8", 0, [] {
    Outcome o;
    o.require(equivalent_on(std::vector<Pattern>{parse_pattern("3241|sh{(1,3),(1,4)}")},
                            std::vector<Pattern>{parse_pattern("3241|sh{(1,4)}")}, 8)
                  .equivalent,
              "3241 shadings");
    o.require(equivalent_on(fixture("BUBBLE_ID"), fixture("BUBBLE_ID_CLASSICAL"), 8).equivalent, "BUBBLE_ID");
    o.require(fixture("BUBBLE_ID_CLASSICAL") ==
                  std::vector<Pattern>{Pattern(Permutation{2, 3, 1}), Pattern(Permutation{3, 2, 1})},
              "BUBBLE_ID_CLASSICAL fixture");
    return o;
  });

  criterion(9, "property suites", 0, [] {
    Outcome o;
    auto check = [&](const char* name, const props::Failure& f) {
      if (f) o.fail(std::string(name) + ": " + *f);
    };
    check("round trip", props::parse_print_roundtrip(1000, 3));
    check("symmetry", props::symmetry_equivariance(6));
    check("recursion", props::operator_recursion(8));
    check("non-inversions", props::non_inversions_preserved(8));
    check("matcher", props::matcher_vs_naive(7));
    return o;
  });

  std::cout << (failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
