#include "meshkit/matcher.hpp"

#include "meshkit/enumerate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace meshkit {

namespace {

constexpr int kMaxPatternLength = 64;

// Cumulative dominance counts: at(x, y) = #{i <= x : word(i) <= y}.
class DominanceTable {
 public:
  explicit DominanceTable(std::span<const int> word) : n_(static_cast<int>(word.size())) {
    const auto side = static_cast<std::size_t>(n_ + 1);
    cells_.assign(side * side, 0);
    for (int x = 1; x <= n_; ++x) {
      const int v = word[static_cast<std::size_t>(x - 1)];
      for (int y = 0; y <= n_; ++y) {
        cells_[idx(x, y)] = cells_[idx(x - 1, y)] + (v <= y ? 1 : 0);
      }
    }
  }

  /// Entries with position in [x1, x2] and value in [y1, y2].
  int rect(int x1, int x2, int y1, int y2) const {
    if (x1 > x2 || y1 > y2) return 0;
    return cells_[idx(x2, y2)] - cells_[idx(x1 - 1, y2)] - cells_[idx(x2, y1 - 1)] + cells_[idx(x1 - 1, y1 - 1)];
  }

 private:
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(y);
  }
  int n_;
  std::vector<int> cells_;
};

// Depth-first search over column subsets in increasing order. The value placed
// at pattern index m must lie strictly between the values already placed at
// the indices holding the nearest smaller and nearest larger pattern letters,
// which keeps every prefix order-isomorphic to the pattern prefix.
class Search {
 public:
  Search(const Pattern& pat, std::span<const int> word)
      : pat_(pat), word_(word), n_(static_cast<int>(word.size())), k_(pat.length()) {
    if (k_ > kMaxPatternLength) throw std::invalid_argument("pattern too long");
    const auto& pw = pat.word();
    for (int m = 0; m < k_; ++m) {
      const int v = pw(m + 1);
      inv_[static_cast<std::size_t>(v)] = m;
      int lo = -1;
      int hi = -1;
      for (int l = 0; l < m; ++l) {
        const int u = pw(l + 1);
        if (u < v && (lo < 0 || u > pw(lo + 1))) lo = l;
        if (u > v && (hi < 0 || u < pw(hi + 1))) hi = l;
      }
      lo_[static_cast<std::size_t>(m)] = lo;
      hi_[static_cast<std::size_t>(m)] = hi;
    }
    if (!pat.is_classical()) table_.emplace(word);
  }

  // Returns false iff the visitor asked to stop.
  template <class Visit>
  bool run(Visit&& visit) {
    if (k_ > n_) return true;
    if (k_ == 0) return check_and_visit(visit);
    return step(0, 0, visit);
  }

 private:
  int val_at(int m) const { return word_[static_cast<std::size_t>(alpha_[static_cast<std::size_t>(m)])]; }

  template <class Visit>
  bool step(int m, int start, Visit& visit) {
    const int lo = lo_[static_cast<std::size_t>(m)];
    const int hi = hi_[static_cast<std::size_t>(m)];
    const int lo_val = lo >= 0 ? val_at(lo) : 0;
    const int hi_val = hi >= 0 ? val_at(hi) : n_ + 1;
    const int last = n_ - (k_ - m);
    for (int pos = start; pos <= last; ++pos) {
      const int v = word_[static_cast<std::size_t>(pos)];
      if (v <= lo_val || v >= hi_val) continue;
      alpha_[static_cast<std::size_t>(m)] = pos;
      if (m + 1 == k_) {
        if (!check_and_visit(visit)) return false;
      } else if (!step(m + 1, pos + 1, visit)) {
        return false;
      }
    }
    return true;
  }

  template <class Visit>
  bool check_and_visit(Visit& visit) {
    // Column and row boundaries, 1-based, with sentinels 0 and n+1.
    cols_[0] = 0;
    rows_[0] = 0;
    for (int i = 1; i <= k_; ++i) {
      cols_[static_cast<std::size_t>(i)] = alpha_[static_cast<std::size_t>(i - 1)] + 1;
      rows_[static_cast<std::size_t>(i)] = val_at(inv_[static_cast<std::size_t>(i)]);
    }
    cols_[static_cast<std::size_t>(k_ + 1)] = n_ + 1;
    rows_[static_cast<std::size_t>(k_ + 1)] = n_ + 1;
    for (const auto& c : pat_.constraints()) {
      if (!satisfied(c)) return true;
    }
    return visit(cols_, rows_, k_);
  }

  int box_count(Box b) const {
    return table_->rect(cols_[static_cast<std::size_t>(b.col)] + 1, cols_[static_cast<std::size_t>(b.col + 1)] - 1,
                        rows_[static_cast<std::size_t>(b.row)] + 1, rows_[static_cast<std::size_t>(b.row + 1)] - 1);
  }

  bool satisfied(const RegionConstraint& c) const {
    switch (c.kind()) {
      case ConstraintKind::Shaded:
        for (const Box& b : c.boxes()) {
          if (box_count(b) != 0) return false;
        }
        return true;
      case ConstraintKind::AtLeast: {
        int total = 0;
        for (const Box& b : c.boxes()) {
          total += box_count(b);
          if (total >= c.count()) return true;
        }
        return false;
      }
      case ConstraintKind::Avoids: {
        const Pattern& q = c.avoided();
        int total = 0;
        for (const Box& b : c.boxes()) total += box_count(b);
        if (total < q.length()) return true;
        std::vector<Point> pts;
        pts.reserve(static_cast<std::size_t>(total));
        for (const Box& b : c.boxes()) {
          const int x1 = cols_[static_cast<std::size_t>(b.col)] + 1;
          const int x2 = cols_[static_cast<std::size_t>(b.col + 1)] - 1;
          const int y1 = rows_[static_cast<std::size_t>(b.row)];
          const int y2 = rows_[static_cast<std::size_t>(b.row + 1)];
          for (int x = x1; x <= x2; ++x) {
            const int v = word_[static_cast<std::size_t>(x - 1)];
            if (v > y1 && v < y2) pts.push_back({x, v});
          }
        }
        std::sort(pts.begin(), pts.end());
        std::vector<int> ys;
        ys.reserve(pts.size());
        for (const auto& pt : pts) ys.push_back(pt.y);
        const Permutation sub = standardize(ys);
        return !contains(q, sub.word());
      }
    }
    return false;
  }

  const Pattern& pat_;
  std::span<const int> word_;
  int n_;
  int k_;
  std::array<int, kMaxPatternLength + 1> inv_{};
  std::array<int, kMaxPatternLength> lo_{};
  std::array<int, kMaxPatternLength> hi_{};
  std::array<int, kMaxPatternLength> alpha_{};
  std::array<int, kMaxPatternLength + 2> cols_{};
  std::array<int, kMaxPatternLength + 2> rows_{};
  std::optional<DominanceTable> table_;
};

Occurrence to_occurrence(const std::array<int, kMaxPatternLength + 2>& cols,
                         const std::array<int, kMaxPatternLength + 2>& rows, int k) {
  Occurrence occ;
  occ.positions.assign(cols.begin() + 1, cols.begin() + 1 + k);
  occ.values.assign(rows.begin() + 1, rows.begin() + 1 + k);
  return occ;
}

}  // namespace

bool for_each_occurrence(const Pattern& pat, std::span<const int> word,
                         const std::function<bool(const Occurrence&)>& visit) {
  Search search(pat, word);
  return search.run([&](const auto& cols, const auto& rows, int k) { return visit(to_occurrence(cols, rows, k)); });
}

std::vector<Occurrence> occurrences(const Pattern& pat, std::span<const int> word) {
  std::vector<Occurrence> out;
  Search search(pat, word);
  search.run([&](const auto& cols, const auto& rows, int k) {
    out.push_back(to_occurrence(cols, rows, k));
    return true;
  });
  return out;
}

std::vector<Occurrence> occurrences(const Pattern& pat, const Permutation& p) { return occurrences(pat, p.word()); }

std::int64_t count_occurrences(const Pattern& pat, std::span<const int> word) {
  std::int64_t count = 0;
  Search search(pat, word);
  search.run([&](const auto&, const auto&, int) {
    ++count;
    return true;
  });
  return count;
}

bool contains(const Pattern& pat, std::span<const int> word) {
  if (pat.length() > static_cast<int>(word.size())) return false;
  Search search(pat, word);
  return !search.run([](const auto&, const auto&, int) { return false; });
}

bool contains(const Pattern& pat, const Permutation& p) { return contains(pat, p.word()); }

bool pointset_contains(const PointSet& ps, const Pattern& pat) {
  const Permutation std_form = ps.standardized();
  return contains(pat, std_form.word());
}

bool avoids_all(std::span<const Pattern> pats, std::span<const int> word) {
  return std::none_of(pats.begin(), pats.end(), [&](const Pattern& p) { return contains(p, word); });
}

bool avoids_all(std::span<const Pattern> pats, const Permutation& p) { return avoids_all(pats, p.word()); }

bool contains(const BarredPattern& pat, std::span<const int> word) {
  if (pat.barred().size() != 1) {
    throw std::invalid_argument("matching is only defined for barred patterns with exactly one bar");
  }
  const int bar = pat.barred().front();
  const Pattern unbarred(pat.unbarred_word());
  const Pattern full(pat.word());
  const int n = static_cast<int>(word.size());
  bool found = false;
  for_each_occurrence(unbarred, word, [&](const Occurrence& occ) {
    for (int x = 1; x <= n; ++x) {
      if (std::find(occ.positions.begin(), occ.positions.end(), x) != occ.positions.end()) continue;
      std::vector<int> cols = occ.positions;
      cols.insert(std::upper_bound(cols.begin(), cols.end(), x), x);
      if (cols[static_cast<std::size_t>(bar - 1)] != x) continue;
      std::vector<int> vals;
      vals.reserve(cols.size());
      for (int c : cols) vals.push_back(word[static_cast<std::size_t>(c - 1)]);
      if (standardize(vals) == full.word()) return true;  // extends; look at the next occurrence
    }
    found = true;
    return false;
  });
  return found;
}

bool contains(const BarredPattern& pat, const Permutation& p) { return contains(pat, p.word()); }

// ---------------------------------------------------------------------------

AvoidanceClass avoidance_class(int n, std::span<const Pattern> pats, int max_length, unsigned workers) {
  if (n < 0 || n > max_length) {
    throw std::out_of_range("avoidance_class: length " + std::to_string(n) + " exceeds the maximum " +
                            std::to_string(max_length));
  }
  AvoidanceClass out;
  out.length = n;
  if (n == 0) {
    if (avoids_all(pats, std::span<const int>())) out.members.emplace_back();
  } else {
    std::vector<std::vector<Permutation>> parts(static_cast<std::size_t>(n));
    run_partitions(n, workers, [&](int part) {
      for_each_in_partition(n, part + 1, [&](std::span<const int> w) {
        if (avoids_all(pats, w)) parts[static_cast<std::size_t>(part)].emplace_back(std::vector<int>(w.begin(), w.end()));
        return true;
      });
    });
    for (auto& p : parts) {
      for (auto& m : p) out.members.push_back(std::move(m));
    }
  }
  out.count = out.members.size();
  return out;
}

std::uint64_t for_each_avoider(int n, std::span<const Pattern> pats,
                               const std::function<void(const Permutation&)>& visit, int max_length) {
  if (n < 0 || n > max_length) {
    throw std::out_of_range("length " + std::to_string(n) + " exceeds the maximum " + std::to_string(max_length));
  }
  std::uint64_t count = 0;
  for_each_permutation(n, [&](std::span<const int> w) {
    if (avoids_all(pats, w)) {
      ++count;
      visit(Permutation(std::vector<int>(w.begin(), w.end())));
    }
    return true;
  });
  return count;
}

std::uint64_t count_avoiders(int n, std::span<const Pattern> pats, unsigned workers) {
  return count_permutations_if(n, [&](std::span<const int> w) { return avoids_all(pats, w); }, workers);
}

EquivalenceResult equivalent_on(std::span<const Pattern> a, std::span<const Pattern> b, int n_max,
                                unsigned workers) {
  for (int n = 0; n <= n_max; ++n) {
    auto bad = first_permutation_if(
        n, [&](std::span<const int> w) { return avoids_all(a, w) != avoids_all(b, w); }, workers);
    if (bad) return {false, std::move(bad)};
  }
  return {};
}

std::optional<Permutation> containment_counterexample(const Pattern& strong, const Pattern& weak, int n_max,
                                                      unsigned workers) {
  for (int n = 0; n <= n_max; ++n) {
    auto bad = first_permutation_if(
        n, [&](std::span<const int> w) { return contains(strong, w) && !contains(weak, w); }, workers);
    if (bad) return bad;
  }
  return std::nullopt;
}

bool implies_containment(const Pattern& strong, const Pattern& weak, int n_max, unsigned workers) {
  return !containment_counterexample(strong, weak, n_max, workers).has_value();
}

}  // namespace meshkit
