#include "meshkit/verify.hpp"

#include "meshkit/dsl.hpp"
#include "meshkit/enumerate.hpp"
#include "meshkit/fixtures.hpp"
#include "meshkit/matcher.hpp"
#include "meshkit/preimage.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

namespace meshkit {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(VerificationReport& rep) : rep_(rep), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() {
    rep_.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  VerificationReport& rep_;
  std::chrono::steady_clock::time_point start_;
};

VerificationReport make_report(std::string suite, int n_max, std::string lhs, std::string rhs) {
  VerificationReport rep;
  rep.suite = std::move(suite);
  rep.n_max = n_max;
  rep.lhs_label = std::move(lhs);
  rep.rhs_label = std::move(rhs);
  return rep;
}

// One row per length; stops after the first failing length.
template <class Lhs, class Rhs>
bool compare_rows(VerificationReport& rep, const std::string& label, int n_min, int n_max, Lhs lhs, Rhs rhs,
                  unsigned workers) {
  for (int n = n_min; n <= n_max; ++n) {
    auto cmp = compare_on(n, lhs, rhs, workers);
    const bool ok = !cmp.first_mismatch;
    rep.add_row({label, n, cmp.lhs, cmp.rhs, ok}, cmp.first_mismatch);
    if (!ok) return false;
  }
  return true;
}

auto sorted_pred(SortOperator op, int passes) {
  return [op, passes](std::span<const int> w) { return sorted_by(op, w, passes); };
}

auto avoid_pred(const std::vector<Pattern>& pats) {
  return [&pats](std::span<const int> w) { return avoids_all(pats, w); };
}

Permutation sort_word(SortOperator op, std::span<const int> w) {
  std::vector<int> out(w.size());
  if (op == SortOperator::Stack) {
    stack_sort_into(w, out);
  } else {
    bubble_into(w, out);
  }
  return Permutation(std::move(out));
}

CheckResult equivalence_check(std::string name, const std::vector<Pattern>& a, const std::vector<Pattern>& b,
                              int n_max, unsigned workers) {
  auto eq = equivalent_on(a, b, n_max, workers);
  CheckResult c{std::move(name), eq.equivalent, "n <= " + std::to_string(n_max), eq.counterexample};
  return c;
}

CheckResult implication_check(const std::string& strong_name, const Pattern& strong, const std::string& weak_name,
                              const Pattern& weak, int n_max, unsigned workers) {
  auto cex = containment_counterexample(strong, weak, n_max, workers);
  return {strong_name + " => " + weak_name, !cex.has_value(), "n <= " + std::to_string(n_max), cex};
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i) c = c * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  return c;
}

std::uint64_t catalan(int n) { return binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

std::uint64_t west2_count(int n) {
  if (n < 0 || n > 12) throw std::out_of_range("west2_count supports 0 <= n <= 12");
  return 2 * binomial(3 * n, n) / (static_cast<std::uint64_t>(n + 1) * static_cast<std::uint64_t>(2 * n + 1));
}

VerificationReport verify_knuth(int n_max, unsigned workers, std::optional<std::vector<Pattern>> basis) {
  auto rep = make_report("knuth", n_max, "S sorts", "Av(basis)");
  Stopwatch sw(rep);
  const std::vector<Pattern> pats = basis ? *basis : fixture("KNUTH");
  compare_rows(rep, "", 1, n_max, sorted_pred(SortOperator::Stack, 1), avoid_pred(pats), workers);
  return rep;
}

VerificationReport verify_west2(int n_max, unsigned workers) {
  auto rep = make_report("west2", n_max, "S^2 sorts", "Av(WEST2)");
  Stopwatch sw(rep);
  const auto pats = fixture("WEST2");
  compare_rows(rep, "", 1, n_max, sorted_pred(SortOperator::Stack, 2), avoid_pred(pats), workers);

  std::ostringstream mismatches;
  bool formula_ok = true;
  for (const auto& row : rep.rows) {
    if (row.n <= 12 && row.lhs != west2_count(row.n)) {
      formula_ok = false;
      mismatches << " n=" << row.n << ": " << row.lhs << " vs " << west2_count(row.n);
    }
  }
  rep.add_check({"closed-form counts", formula_ok, formula_ok ? "2(3n)!/((n+1)!(2n+1)!)" : mismatches.str(), {}});

  const BarredPattern barred(Permutation{3, 5, 2, 4, 1}, {2});
  const Pattern mesh = barred_to_mesh(barred);
  const bool same_form = std::find(pats.begin(), pats.end(), mesh) != pats.end();
  rep.add_check({"barred 35'241 translates to the stored mesh pattern", same_form, print(mesh), {}});
  std::optional<Permutation> cex;
  for (int n = 1; n <= n_max && !cex; ++n) {
    cex = first_permutation_if(
        n, [&](std::span<const int> w) { return contains(barred, w) != contains(mesh, w); }, workers);
  }
  rep.add_check({"barred and mesh readings agree", !cex, "n <= " + std::to_string(n_max), cex});
  return rep;
}

VerificationReport verify_west3(int n_max, unsigned workers) {
  auto rep = make_report("west3", n_max, "S^3 sorts", "Av(W3_BASIS)");
  Stopwatch sw(rep);
  const auto pats = fixture("W3_BASIS");
  compare_rows(rep, "", 1, n_max, sorted_pred(SortOperator::Stack, 3), avoid_pred(pats), workers);
  return rep;
}

VerificationReport verify_w3_stages(int n_max, unsigned workers) {
  auto rep = make_report("w3-stages", n_max, "S^3 sorts", "Av(29)");
  Stopwatch sw(rep);
  const auto& lib = default_fixtures();
  std::vector<Pattern> stage;
  for (const char* set : {"I_SET", "J3", "J2_SET", "J1_SET"}) {
    auto part = lib.patterns(set);
    stage.insert(stage.end(), part.begin(), part.end());
  }
  rep.add_check({"intermediate set size", stage.size() == 29, std::to_string(stage.size()) + " patterns", {}});
  compare_rows(rep, "", 1, n_max, sorted_pred(SortOperator::Stack, 3), avoid_pred(stage), workers);

  auto implies = [&](const std::string& set, const std::string& label, const std::string& wset,
                     const std::string& wlabel) {
    rep.add_check(implication_check(label, lib.get(set, label), wlabel, lib.get(wset, wlabel), n_max, workers));
  };
  for (int i = 1; i <= 6; ++i) implies("J1_SET", "J1_" + std::to_string(i), "I_SET", "I1");
  for (int i = 7; i <= 9; ++i) implies("J1_SET", "J1_" + std::to_string(i), "J2_SET", "J2_12");
  for (int i = 1; i <= 6; ++i) implies("J2_SET", "J2_" + std::to_string(i), "I_SET", "I1");
  for (int i = 7; i <= 9; ++i) implies("J2_SET", "J2_" + std::to_string(i), "I_SET", "I2");
  implies("J3", "J3", "I_SET", "I4");
  implies("W3_SIMPLIFICATION", "J2_10_lower", "I_SET", "I5");
  implies("W3_SIMPLIFICATION", "J2_11_lower", "I_SET", "I5");
  implies("W3_SIMPLIFICATION", "J1_10_split", "W3_BASIS", "J2_10");
  implies("W3_SIMPLIFICATION", "J1_11_split", "W3_BASIS", "J2_11");
  implies("W3_SIMPLIFICATION", "J1_10_lower_two", "I_SET", "I2");
  implies("W3_SIMPLIFICATION", "J1_11_lower_two", "I_SET", "I2");

  // A decorated box holds no entries, one, or several; each refinement splits
  // along those cases.
  auto split = [&](const std::string& set, const std::string& label, std::vector<std::string> parts) {
    std::vector<Pattern> pieces{lib.get("W3_BASIS", label)};
    for (const auto& p : parts) pieces.push_back(lib.get("W3_SIMPLIFICATION", p));
    rep.add_check(equivalence_check(label + " splits by lower-box occupancy", {lib.get(set, label)}, pieces, n_max,
                                    workers));
  };
  split("J2_SET", "J2_10", {"J2_10_lower"});
  split("J2_SET", "J2_11", {"J2_11_lower"});
  split("J1_SET", "J1_10", {"J1_10_split", "J1_10_lower_two"});
  split("J1_SET", "J1_11", {"J1_11_split", "J1_11_lower_two"});
  return rep;
}

VerificationReport verify_lemma_I(int n_max, unsigned workers, int occurrence_n_max) {
  auto rep = make_report("lemma-i", n_max, "S(p) has 2341", "p has some I");
  Stopwatch sw(rep);
  const Pattern w1 = fixture("W1").at(0);
  const auto iset = fixture("I_SET");
  compare_rows(
      rep, "", 1, n_max, [&](std::span<const int> w) { return contains(w1, sort_word(SortOperator::Stack, w)); },
      [&](std::span<const int> w) { return !avoids_all(iset, w); }, workers);

  // Each I pattern is a 2341-like configuration plus its largest entry, the
  // element that forces the stack to empty. Strip it to get the four entries
  // that survive as the 2341 occurrence.
  std::vector<int> aux_index;
  for (const auto& pat : iset) {
    const auto vals = pat.word().values();
    aux_index.push_back(static_cast<int>(std::max_element(vals.begin(), vals.end()) - vals.begin()));
  }

  const int occ_max = std::min(n_max, occurrence_n_max);
  std::uint64_t checked = 0;
  std::optional<Permutation> cex;
  for (int n = 1; n <= occ_max && !cex; ++n) {
    std::vector<std::uint64_t> part_checked(static_cast<std::size_t>(n), 0);
    std::vector<std::optional<Permutation>> part_cex(static_cast<std::size_t>(n));
    run_partitions(n, workers, [&](int part) {
      auto& seen = part_checked[static_cast<std::size_t>(part)];
      auto& bad = part_cex[static_cast<std::size_t>(part)];
      for_each_in_partition(n, part + 1, [&](std::span<const int> w) {
        const Permutation p(std::vector<int>(w.begin(), w.end()));
        const SortTrace tr = trace_stack_sort(p);
        if (!contains(w1, tr.output)) return true;
        std::vector<std::set<std::vector<int>>> reach(iset.size());
        for (std::size_t t = 0; t < iset.size(); ++t) {
          for_each_occurrence(iset[t], w, [&](const Occurrence& occ) {
            std::vector<int> pos = occ.positions;
            pos.erase(pos.begin() + aux_index[t]);
            reach[t].insert(std::move(pos));
            return true;
          });
        }
        bool ok = true;
        for_each_occurrence(w1, tr.output.word(), [&](const Occurrence& occ) {
          std::vector<int> pulled;
          for (int o : occ.positions) pulled.push_back(tr.source[static_cast<std::size_t>(o - 1)]);
          std::sort(pulled.begin(), pulled.end());
          int sources = 0;
          for (const auto& r : reach) sources += r.count(pulled) ? 1 : 0;
          ++seen;
          ok = sources == 1;
          return ok;
        });
        if (!ok) bad = p;
        return ok;
      });
    });
    for (std::size_t i = 0; i < part_cex.size(); ++i) {
      checked += part_checked[i];
      if (!cex && part_cex[i]) cex = part_cex[i];
    }
  }
  rep.add_check({"each 2341 occurrence in S(p) comes from exactly one I pattern", !cex,
                 std::to_string(checked) + " occurrences, n <= " + std::to_string(occ_max), cex});
  return rep;
}

VerificationReport verify_lemma_j3(int n_max, unsigned workers) {
  auto rep = make_report("lemma-j3", n_max, "p has J3", "and S(p) has W2");
  Stopwatch sw(rep);
  const Pattern j3 = fixture("J3").at(0);
  const Pattern w2 = fixture("W2").at(0);
  compare_rows(
      rep, "", 1, n_max, [&](std::span<const int> w) { return contains(j3, w); },
      [&](std::span<const int> w) { return contains(j3, w) && contains(w2, sort_word(SortOperator::Stack, w)); },
      workers);
  bool vacuous = true;
  for (const auto& row : rep.rows) {
    if (row.n < 5 && row.lhs != 0) vacuous = false;
  }
  rep.add_check({"no permutation shorter than 5 contains J3", vacuous, "", {}});
  rep.add_check(equivalence_check("J3 marked and mesh forms agree", fixture("J3"), fixture("J3_MESH"), n_max, workers));
  return rep;
}

VerificationReport verify_simple(int n_max, unsigned workers) {
  auto rep = make_report("simple", n_max, "simple", "Av(simple basis)");
  Stopwatch sw(rep);
  const auto& basis = simple_basis();
  compare_rows(
      rep, "", 1, n_max, [](std::span<const int> w) { return is_simple(w); }, avoid_pred(basis), workers);
  const Permutation p{2, 8, 4, 6, 5, 3, 1, 7};
  rep.add_check({"28465317 is not simple and contains a basis pattern", !is_simple(p) && !avoids_all(basis, p),
                 "", {}});
  const Permutation q{2, 4, 1, 3};
  rep.add_check({"2413 is simple and avoids the basis", is_simple(q) && avoids_all(basis, q), "", {}});
  return rep;
}

VerificationReport verify_bubble(int n_max, unsigned workers) {
  auto rep = make_report("bubble", n_max, "lhs", "rhs");
  Stopwatch sw(rep);
  const auto classical = fixture("BUBBLE_ID_CLASSICAL");
  const auto marked = fixture("BUBBLE_ID");
  const auto b1243 = fixture("BUBBLE_1243");
  const Pattern target(Permutation{1, 2, 4, 3});
  compare_rows(rep, "B sorts = Av(231,321)", 1, n_max, sorted_pred(SortOperator::Bubble, 1), avoid_pred(classical),
               workers);
  compare_rows(rep, "B sorts = Av(BUBBLE_ID)", 1, n_max, sorted_pred(SortOperator::Bubble, 1), avoid_pred(marked),
               workers);
  compare_rows(
      rep, "B^-1(Av(1243)) = Av(BUBBLE_1243)", 1, n_max,
      [&](std::span<const int> w) { return !contains(target, sort_word(SortOperator::Bubble, w)); },
      avoid_pred(b1243), workers);
  const Permutation out = bubble_once(Permutation{5, 2, 1, 3, 4});
  rep.add_check({"B(52134) = 21345", out == Permutation{2, 1, 3, 4, 5}, "got " + out.str(), {}});
  return rep;
}

VerificationReport verify_preimage(int n_max, unsigned workers) {
  auto rep = make_report("preimage", n_max, "op^-1(Av)", "Av(basis)");
  Stopwatch sw(rep);
  for (SortOperator op : {SortOperator::Stack, SortOperator::Bubble}) {
    for (int k = 1; k <= 3; ++k) {
      for_each_permutation(k, [&](std::span<const int> tw) {
        const Pattern target{Permutation(std::vector<int>(tw.begin(), tw.end()))};
        const auto basis = preimage_basis(op, target);
        auto sub = preimage_verify(basis, n_max, workers);
        for (auto& row : sub.rows) {
          row.label = std::string(to_string(op)) + " " + target.word().str();
          rep.add_row(row, row.pass ? std::nullopt : sub.counterexample);
        }
        return true;
      });
    }
  }

  const auto west = stack_preimage_basis(Pattern(Permutation{2, 3, 1}));
  rep.add_check(equivalence_check("stack basis of 231 matches WEST2", west.patterns, fixture("WEST2"), n_max, workers));

  const auto i_basis = stack_preimage_basis(Pattern(Permutation{2, 3, 4, 1}));
  rep.add_check(equivalence_check("stack basis of 2341 matches I_SET", i_basis.patterns, fixture("I_SET"), n_max,
                                  workers));
  rep.add_check(equivalence_check("expanded stack basis of 2341 matches I_SET", expand_marks(i_basis.patterns),
                                  fixture("I_SET"), n_max, workers));

  const auto b = bubble_preimage_basis(Pattern(Permutation{1, 2, 4, 3}));
  rep.add_check(equivalence_check("bubble basis of 1243 matches BUBBLE_1243", b.patterns, fixture("BUBBLE_1243"),
                                  n_max, workers));

  // Members keep every inversion of the target.
  bool superset = true;
  for (const auto& basis : {west, i_basis, b}) {
    const auto& t = basis.target.word();
    for (const auto& m : basis.patterns) {
      for (auto [i, j] : inversions(t)) {
        const int a = t(i);
        const int c = t(j);
        const auto inv = m.word().inverse();
        if (inv(a) > inv(c)) superset = false;
      }
    }
  }
  rep.add_check({"members keep the target's inversions", superset, "", {}});
  return rep;
}

VerificationReport verify_expand(int n_max, unsigned workers) {
  auto rep = make_report("expand", n_max, "", "");
  Stopwatch sw(rep);
  const auto& lib = default_fixtures();
  for (const auto& set : lib.names()) {
    for (const auto& np : lib.set(set)) {
      const auto& cons = np.pattern.constraints();
      const bool marked = std::any_of(cons.begin(), cons.end(),
                                      [](const RegionConstraint& c) { return c.kind() == ConstraintKind::AtLeast; });
      if (!marked) continue;
      std::vector<Pattern> expanded;
      try {
        expanded = expand_marks(np.pattern);
      } catch (const std::invalid_argument&) {
        continue;  // counts above 1 or marks under a decoration
      }
      rep.add_check(equivalence_check(set + "/" + np.label, {np.pattern}, expanded, n_max, workers));
    }
  }
  const auto b1243 = fixture("BUBBLE_1243");
  const auto eb = expand_marks(b1243);
  rep.add_check({"BUBBLE_1243 expands to 8 mesh patterns", eb.size() == 8, std::to_string(eb.size()) + " patterns", {}});
  const auto ej = expand_marks(fixture("J3").at(0));
  const Pattern j3_mesh = fixture("J3_MESH").at(0);
  rep.add_check({"J3 expansion contains the stored mesh form",
                 std::find(ej.begin(), ej.end(), j3_mesh) != ej.end(), print(j3_mesh), {}});
  return rep;
}

VerificationReport verify_equivalences(int n_max, unsigned workers) {
  auto rep = make_report("equivalence", n_max, "", "");
  Stopwatch sw(rep);
  const Pattern wide = parse_pattern("3241|sh{(1,3),(1,4)}");
  const Pattern narrow = parse_pattern("3241|sh{(1,4)}");
  rep.add_check(equivalence_check(print(wide) + " ~ " + print(narrow), {wide}, {narrow}, n_max, workers));
  rep.add_check(equivalence_check("BUBBLE_ID ~ {231, 321}", fixture("BUBBLE_ID"), fixture("BUBBLE_ID_CLASSICAL"),
                                  n_max, workers));
  const Pattern marked21 = parse_pattern("21|mark{(1,2)}>=1");
  rep.add_check(equivalence_check(print(marked21) + " ~ 231", {marked21}, fixture("KNUTH"), n_max, workers));
  return rep;
}

CountTable count_table(SortOperator op, int k_max, int n_max, unsigned workers) {
  if (k_max < 1 || n_max < 1) throw std::invalid_argument("count_table needs k_max >= 1 and n_max >= 1");
  CountTable t{op, k_max, n_max, {}};
  t.counts.assign(static_cast<std::size_t>(k_max), std::vector<std::uint64_t>(static_cast<std::size_t>(n_max), 0));
  for (int n = 1; n <= n_max; ++n) {
    // hist[j] = permutations first sorted after exactly j passes (j <= k_max).
    std::vector<std::vector<std::uint64_t>> hist(static_cast<std::size_t>(n),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(k_max) + 1, 0));
    run_partitions(n, workers, [&](int part) {
      auto& h = hist[static_cast<std::size_t>(part)];
      std::vector<int> cur(static_cast<std::size_t>(n));
      std::vector<int> next(cur.size());
      for_each_in_partition(n, part + 1, [&](std::span<const int> w) {
        std::copy(w.begin(), w.end(), cur.begin());
        for (int j = 0; j <= k_max; ++j) {
          bool id = true;
          for (int i = 0; i < n && id; ++i) id = cur[static_cast<std::size_t>(i)] == i + 1;
          if (id) {
            ++h[static_cast<std::size_t>(j)];
            break;
          }
          if (op == SortOperator::Stack) {
            stack_sort_into(cur, next);
          } else {
            bubble_into(cur, next);
          }
          cur.swap(next);
        }
        return true;
      });
    });
    std::uint64_t running = 0;
    for (int j = 0; j <= k_max; ++j) {
      for (const auto& h : hist) running += h[static_cast<std::size_t>(j)];
      if (j >= 1) t.counts[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(n - 1)] = running;
    }
  }
  return t;
}

std::string format_count_table(const CountTable& t) {
  std::ostringstream out;
  out << to_string(t.op) << " sort: permutations of length n sorted by k passes\n";
  out << "   n";
  for (int k = 1; k <= t.k_max; ++k) out << "  " << std::string(9, ' ') << "k=" << k;
  out << "\n";
  for (int n = 1; n <= t.n_max; ++n) {
    std::string cell = std::to_string(n);
    out << std::string(4 - std::min<std::size_t>(4, cell.size()), ' ') << cell;
    for (int k = 1; k <= t.k_max; ++k) {
      std::string v = std::to_string(t.at(k, n));
      const std::size_t width = 11 + std::to_string(k).size() + 2 - 2;
      out << "  " << std::string(width > v.size() ? width - v.size() : 0, ' ') << v;
    }
    out << "\n";
  }
  return out.str();
}

VerificationReport verify_counts(int n_max, unsigned workers) {
  auto rep = make_report("counts", n_max, "computed", "expected");
  Stopwatch sw(rep);
  if (n_max < 1) return rep;
  const int k_max = std::max(2, n_max - 1);
  const CountTable t = count_table(SortOperator::Stack, k_max, n_max, workers);
  for (int n = 1; n <= n_max; ++n) {
    const auto got = t.at(1, n);
    rep.add_row({"k=1 (Catalan)", n, got, catalan(n), got == catalan(n)});
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto got = t.at(2, n);
    rep.add_row({"k=2 (closed form)", n, got, west2_count(n), got == west2_count(n)});
  }
  bool all = true;
  for (int n = 2; n <= n_max; ++n) {
    if (n - 1 <= k_max && t.at(n - 1, n) != factorial(n)) all = false;
  }
  rep.add_check({"n-1 passes sort all of S_n", all, "", {}});
  const CountTable b = count_table(SortOperator::Bubble, 1, n_max, workers);
  bool powers = true;
  for (int n = 1; n <= n_max; ++n) powers = powers && b.at(1, n) == (std::uint64_t{1} << (n - 1));
  rep.add_check({"one bubble pass sorts 2^(n-1) permutations", powers, "", {}});
  return rep;
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all = {
      {"knuth", 8, "one stack pass sorts exactly Av(231)",
       [](int n, unsigned w) { return verify_knuth(n, w); }},
      {"west2", 8, "two stack passes sort exactly Av(2341, 35'241)", verify_west2},
      {"west3", 9, "three stack passes sort exactly Av(W3_BASIS)", verify_west3},
      {"w3-stages", 8, "the 29 intermediate patterns and their reductions", verify_w3_stages},
      {"lemma-i", 8, "occurrences of 2341 after one pass come from I1..I5",
       [](int n, unsigned w) { return verify_lemma_I(n, w); }},
      {"lemma-j3", 8, "J3 produces W2 after one pass", verify_lemma_j3},
      {"simple", 8, "simple permutations are Av(simple basis)", verify_simple},
      {"bubble", 8, "bubble-sort preimages", verify_bubble},
      {"preimage", 8, "derived preimage bases", verify_preimage},
      {"equivalence", 8, "avoidance-equivalent pattern pairs", verify_equivalences},
      {"expand", 7, "mark expansion preserves avoidance", verify_expand},
      {"counts", 9, "passes-to-sort counts", verify_counts},
  };
  return all;
}

const SuiteInfo& find_suite(std::string_view name) {
  for (const auto& s : suites()) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace meshkit
