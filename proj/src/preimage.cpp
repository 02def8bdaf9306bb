#include "meshkit/preimage.hpp"

#include "meshkit/enumerate.hpp"
#include "meshkit/matcher.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace meshkit {

namespace {

BoxSet region_above(int first_col, int last_col, int a, int k) {
  BoxSet out;
  for (int t = first_col; t <= last_col; ++t) {
    for (int u = a; u <= k; ++u) out.push_back({t, u});
  }
  return out;  // already sorted
}

bool subset_of(const BoxSet& small, const BoxSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::optional<Pattern> derive_member(SortOperator op, const std::vector<int>& cand, const std::vector<int>& tpos) {
  const int k = static_cast<int>(cand.size());
  BoxSet shaded;
  std::vector<BoxSet> marks;
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const int a = cand[static_cast<std::size_t>(i - 1)];
      const int b = cand[static_cast<std::size_t>(j - 1)];
      if (a < b) continue;
      const bool survives = tpos[static_cast<std::size_t>(a)] < tpos[static_cast<std::size_t>(b)];
      const int first_col = op == SortOperator::Stack ? i : 0;
      const int first_blocker = op == SortOperator::Stack ? i + 1 : 1;
      bool blocked = false;
      for (int s = first_blocker; s < j && !blocked; ++s) {
        if (s != i && cand[static_cast<std::size_t>(s - 1)] > a) blocked = true;
      }
      BoxSet reg = region_above(first_col, j - 1, a, k);
      if (survives) {
        if (!blocked) marks.push_back(std::move(reg));
      } else {
        if (blocked) return std::nullopt;
        shaded.insert(shaded.end(), reg.begin(), reg.end());
      }
    }
  }
  shaded = make_box_set(std::move(shaded));
  for (auto& m : marks) {
    BoxSet rest;
    std::set_difference(m.begin(), m.end(), shaded.begin(), shaded.end(), std::back_inserter(rest));
    if (rest.empty()) return std::nullopt;
    m = std::move(rest);
  }
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
  std::vector<RegionConstraint> cons;
  if (!shaded.empty()) cons.push_back(RegionConstraint::shaded(shaded));
  for (std::size_t x = 0; x < marks.size(); ++x) {
    bool implied = false;
    for (std::size_t y = 0; y < marks.size() && !implied; ++y) {
      if (y != x && subset_of(marks[y], marks[x])) implied = true;
    }
    if (!implied) cons.push_back(RegionConstraint::at_least(marks[x], 1));
  }
  return Pattern(Permutation(cand), std::move(cons));
}

void expand_into(const Pattern& pat, std::vector<Pattern>& out) {
  const auto& cons = pat.constraints();
  auto mark = std::find_if(cons.begin(), cons.end(),
                           [](const RegionConstraint& c) { return c.kind() == ConstraintKind::AtLeast; });
  if (mark == cons.end()) {
    out.push_back(pat);
    return;
  }
  const BoxSet shaded = pat.shaded_boxes();
  for (const Box& b : mark->boxes()) {
    if (std::binary_search(shaded.begin(), shaded.end(), b)) continue;
    // Keep the constraints not satisfied by a point in b.
    std::vector<RegionConstraint> rest;
    for (const auto& c : cons) {
      if (c.kind() == ConstraintKind::AtLeast && std::binary_search(c.boxes().begin(), c.boxes().end(), b)) continue;
      rest.push_back(c);
    }
    expand_into(insert_point(Pattern(pat.word(), std::move(rest)), b), out);
  }
}

}  // namespace

PreimageBasis preimage_basis(SortOperator op, const Pattern& target) {
  if (!target.is_classical()) {
    throw std::invalid_argument("preimage derivation needs a classical target");
  }
  const int k = target.length();
  std::vector<int> tpos(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) tpos[static_cast<std::size_t>(target.word()(i))] = i;

  PreimageBasis basis{target, op, {}};
  std::vector<int> cand(static_cast<std::size_t>(k));
  std::iota(cand.begin(), cand.end(), 1);
  do {
    std::vector<int> cpos(static_cast<std::size_t>(k) + 1);
    for (int i = 1; i <= k; ++i) cpos[static_cast<std::size_t>(cand[static_cast<std::size_t>(i - 1)])] = i;
    bool keeps_inversions = true;
    for (int a = 1; a <= k && keeps_inversions; ++a) {
      for (int b = 1; b < a; ++b) {
        const auto ua = static_cast<std::size_t>(a);
        const auto ub = static_cast<std::size_t>(b);
        if (tpos[ua] < tpos[ub] && cpos[ua] > cpos[ub]) {
          keeps_inversions = false;
          break;
        }
      }
    }
    if (!keeps_inversions) continue;
    if (auto member = derive_member(op, cand, tpos)) basis.patterns.push_back(std::move(*member));
  } while (std::next_permutation(cand.begin(), cand.end()));
  return basis;
}

PreimageBasis stack_preimage_basis(const Pattern& target) { return preimage_basis(SortOperator::Stack, target); }
PreimageBasis bubble_preimage_basis(const Pattern& target) { return preimage_basis(SortOperator::Bubble, target); }

Pattern insert_point(const Pattern& pat, Box b) {
  const int k = pat.length();
  if (b.col < 0 || b.col > k || b.row < 0 || b.row > k) {
    throw std::invalid_argument("box outside the pattern grid");
  }
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 1; i <= k; ++i) {
    if (i == b.col + 1) word.push_back(b.row + 1);
    const int v = pat.word()(i);
    word.push_back(v > b.row ? v + 1 : v);
  }
  if (b.col == k) word.push_back(b.row + 1);

  auto split = [](int x, int at) -> std::vector<int> {
    if (x < at) return {x};
    if (x > at) return {x + 1};
    return {x, x + 1};
  };
  auto lift = [&](const BoxSet& boxes) {
    BoxSet out;
    for (const Box& old : boxes) {
      for (int c : split(old.col, b.col)) {
        for (int r : split(old.row, b.row)) out.push_back({c, r});
      }
    }
    return make_box_set(std::move(out));
  };

  std::vector<RegionConstraint> cons;
  for (const auto& c : pat.constraints()) {
    switch (c.kind()) {
      case ConstraintKind::Shaded:
        cons.push_back(RegionConstraint::shaded(lift(c.boxes())));
        break;
      case ConstraintKind::AtLeast:
        cons.push_back(RegionConstraint::at_least(lift(c.boxes()), c.count()));
        break;
      case ConstraintKind::Avoids:
        if (std::binary_search(c.boxes().begin(), c.boxes().end(), b)) {
          throw std::invalid_argument("cannot insert a point under an avoidance constraint");
        }
        cons.push_back(RegionConstraint::avoids(lift(c.boxes()), c.avoided()));
        break;
    }
  }
  return Pattern(Permutation(std::move(word)), std::move(cons));
}

std::vector<Pattern> expand_marks(const Pattern& pat) {
  for (const auto& c : pat.constraints()) {
    if (c.kind() == ConstraintKind::AtLeast && c.count() != 1) {
      throw std::invalid_argument("mark expansion supports only counts of 1");
    }
  }
  std::vector<Pattern> out;
  expand_into(pat, out);
  dedupe(out);
  return out;
}

std::vector<Pattern> expand_marks(std::span<const Pattern> pats) {
  std::vector<Pattern> out;
  for (const auto& p : pats) {
    auto part = expand_marks(p);
    out.insert(out.end(), part.begin(), part.end());
  }
  dedupe(out);
  return out;
}

VerificationReport preimage_verify(const PreimageBasis& basis, int n_max, unsigned workers) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.suite = std::string("preimage-") + std::string(to_string(basis.op)) + "-" + basis.target.word().str();
  rep.n_max = n_max;
  rep.lhs_label = "op^-1(Av)";
  rep.rhs_label = "Av(basis)";
  const Pattern& target = basis.target;
  const SortOperator op = basis.op;
  for (int n = 1; n <= n_max; ++n) {
    auto lhs = [&](std::span<const int> w) {
      std::vector<int> out(w.size());
      if (op == SortOperator::Stack) {
        stack_sort_into(w, out);
      } else {
        bubble_into(w, out);
      }
      return !contains(target, std::span<const int>(out));
    };
    auto rhs = [&](std::span<const int> w) { return avoids_all(basis.patterns, w); };
    auto cmp = compare_on(n, lhs, rhs, workers);
    rep.add_row({"", n, cmp.lhs, cmp.rhs, !cmp.first_mismatch.has_value()}, cmp.first_mismatch);
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

}  // namespace meshkit
