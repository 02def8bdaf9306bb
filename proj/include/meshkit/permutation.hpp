#pragma once

// Permutations in one-line notation and the operations on them that the rest
// of the library builds on: standardization, graphs, inversions, the eight
// symmetries of the square, intervals and simplicity.
//
// Positions and values are 1-based. A permutation of length n stores the word
// pi(1) ... pi(n) in a vector indexed from 0.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace meshkit {

class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `word` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word)
      : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);

  /// Digit string ("526413") for n <= 9, bracket form ("[10,2,...]") in
  /// general. Whitespace is ignored.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(word_.size()); }
  bool empty() const { return word_.empty(); }

  /// pi(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> word() const { return word_; }
  const std::vector<int>& values() const { return word_; }

  /// Inverse permutation: position of each value.
  Permutation inverse() const;

  bool is_identity() const;

  /// Digit string when n <= 9, bracket form otherwise.
  std::string str() const;

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}
  friend Permutation standardize(std::span<const int>);

  std::vector<int> word_;
};

/// Serialization used by reports and the CLI; same as Permutation::str().
std::string to_string(const Permutation& p);

/// Relabels distinct integers to 1..k preserving relative order.
/// Throws std::invalid_argument on duplicate entries.
Permutation standardize(std::span<const int> seq);

/// True iff `word` is a bijection of {1..word.size()}.
bool is_permutation_word(std::span<const int> word);

struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
};

/// A finite set of lattice points with pairwise distinct x- and distinct
/// y-coordinates. Points are kept sorted by x.
class PointSet {
 public:
  PointSet() = default;
  /// Throws std::invalid_argument if two points share an x or a y.
  explicit PointSet(std::vector<Point> points);

  std::span<const Point> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  /// Standardizes the set by coordinate ranks: the permutation read off by
  /// walking the points left to right and recording each y-rank.
  Permutation standardized() const;

  bool operator==(const PointSet&) const = default;

 private:
  std::vector<Point> points_;
};

/// G(p) = {(i, p(i))}.
PointSet graph(const Permutation& p);

/// Position pairs (i, j), i < j, with p(i) > p(j); sorted lexicographically.
std::vector<std::pair<int, int>> inversions(const Permutation& p);
std::int64_t inversion_count(std::span<const int> word);

// ---------------------------------------------------------------------------
// Symmetries of the square

/// One of the eight elements of the dihedral group of the square. The action
/// on a permutation is: take the inverse if `transpose`, then reverse if
/// `reverse`, then complement if `complement`.
struct Symmetry {
  bool transpose = false;
  bool reverse = false;
  bool complement = false;

  static constexpr Symmetry identity() { return {}; }
  static constexpr Symmetry reversal() { return {false, true, false}; }
  static constexpr Symmetry complementation() { return {false, false, true}; }
  static constexpr Symmetry inversion() { return {true, false, false}; }

  /// Action on a point of an m x m square with coordinates in 1..m.
  Point apply(Point pt, int m) const;

  /// Short name built from the generators, e.g. "id", "r", "c", "i", "rc".
  std::string name() const;

  auto operator<=>(const Symmetry&) const = default;
};

/// All eight symmetries, identity first.
const std::array<Symmetry, 8>& all_symmetries();

/// (a * b) acts as b first, then a.
Symmetry compose(Symmetry a, Symmetry b);
Symmetry inverse(Symmetry s);

Permutation apply_symmetry(Symmetry s, const Permutation& p);

// ---------------------------------------------------------------------------
// Intervals and simple permutations

struct Interval {
  int first_position = 0;  // inclusive, 1-based
  int last_position = 0;
  int low_value = 0;       // inclusive
  int high_value = 0;
  auto operator<=>(const Interval&) const = default;
};

/// Every nontrivial interval (at least two entries, not the whole
/// permutation), ordered by first position then length.
std::vector<Interval> nontrivial_intervals(const Permutation& p);

bool is_simple(const Permutation& p);
bool is_simple(std::span<const int> word);

}  // namespace meshkit
