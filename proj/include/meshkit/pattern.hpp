#pragma once

// The unified pattern type. A pattern is a classical word together with a
// list of region constraints on the boxes of its (k+1) x (k+1) grid:
//
//   Shaded      - the region holds no entries of the permutation
//   AtLeast(m)  - the region holds at least m entries (marked mesh)
//   Avoids(q)   - the entries in the region avoid q (decorated)
//
// Classical patterns have no constraints, mesh patterns only Shaded ones.
// Box (i, j) is the cell whose lower-left corner is (i, j), with 0 <= i, j <= k.

#include "meshkit/permutation.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace meshkit {

struct Box {
  int col = 0;
  int row = 0;
  auto operator<=>(const Box&) const = default;
};

/// Sorted, duplicate-free list of boxes.
using BoxSet = std::vector<Box>;

BoxSet make_box_set(std::vector<Box> boxes);

class Pattern;

enum class ConstraintKind { Shaded, AtLeast, Avoids };

class RegionConstraint {
 public:
  static RegionConstraint shaded(BoxSet boxes);
  static RegionConstraint at_least(BoxSet boxes, int count);
  static RegionConstraint avoids(BoxSet boxes, Pattern avoided);

  ConstraintKind kind() const { return kind_; }
  const BoxSet& boxes() const { return boxes_; }
  /// Minimum number of entries; only meaningful for AtLeast.
  int count() const { return count_; }
  /// The avoided pattern; only valid for Avoids.
  const Pattern& avoided() const { return *avoided_; }

  bool operator==(const RegionConstraint& other) const;
  /// Total order used for canonical constraint lists: sh < mark < dec, then
  /// by boxes, count, and payload.
  bool operator<(const RegionConstraint& other) const;

 private:
  RegionConstraint(ConstraintKind kind, BoxSet boxes, int count, std::shared_ptr<const Pattern> avoided)
      : kind_(kind), boxes_(std::move(boxes)), count_(count), avoided_(std::move(avoided)) {}

  ConstraintKind kind_ = ConstraintKind::Shaded;
  BoxSet boxes_;
  int count_ = 0;
  std::shared_ptr<const Pattern> avoided_;
};

class Pattern {
 public:
  Pattern() = default;
  /// A classical pattern.
  explicit Pattern(Permutation word) : word_(std::move(word)) {}
  /// Validates every box against the grid of `word` and stores the
  /// constraints in canonical order: all Shaded boxes merged into a single
  /// constraint first, then AtLeast, then Avoids, duplicates removed.
  /// Throws std::invalid_argument for an out-of-grid box or an empty box set.
  Pattern(Permutation word, std::vector<RegionConstraint> constraints);

  const Permutation& word() const { return word_; }
  int length() const { return word_.size(); }
  const std::vector<RegionConstraint>& constraints() const { return constraints_; }

  bool is_classical() const { return constraints_.empty(); }
  bool is_mesh() const;
  /// Shaded and AtLeast constraints only.
  bool is_marked_mesh() const;
  bool has_decorations() const;

  /// Union of all shaded boxes.
  BoxSet shaded_boxes() const;

  /// The pattern with every constraint dropped.
  Pattern classical() const { return Pattern(word_); }

  bool operator==(const Pattern&) const = default;
  bool operator<(const Pattern& other) const;

 private:
  Permutation word_;
  std::vector<RegionConstraint> constraints_;
};

/// Checked construction; equivalent to the Pattern constructor.
Pattern make_pattern(Permutation word, std::vector<RegionConstraint> constraints);

/// Mesh pattern (word, shaded boxes).
Pattern mesh_pattern(Permutation word, std::vector<Box> shaded);

/// Box (i, j) of a k-grid under a symmetry: reverse sends it to (k-i, j),
/// complement to (i, k-j), inverse to (j, i).
Box apply_symmetry(Symmetry s, Box b, int k);

/// Acts on the word and on every box; Avoids payloads transform with the
/// same symmetry.
Pattern apply_symmetry_pattern(Symmetry s, const Pattern& pat);

/// Distinct images of `pat` under all eight symmetries.
std::vector<Pattern> symmetry_class(const Pattern& pat);

/// Closure of a set under the eight symmetries, sorted and duplicate-free.
std::vector<Pattern> symmetry_closure(const std::vector<Pattern>& pats);

/// Sorts and removes structural duplicates.
void dedupe(std::vector<Pattern>& pats);

// ---------------------------------------------------------------------------
// Barred patterns

class BarredPattern {
 public:
  /// `barred` lists 1-based positions. Throws std::invalid_argument if a
  /// position is out of range or every entry is barred.
  BarredPattern(Permutation word, std::vector<int> barred);

  const Permutation& word() const { return word_; }
  /// Sorted 1-based barred positions.
  const std::vector<int>& barred() const { return barred_; }
  bool is_barred(int position) const;

  /// Standardization of the unbarred entries.
  Permutation unbarred_word() const;

  bool operator==(const BarredPattern&) const = default;

 private:
  Permutation word_;
  std::vector<int> barred_;
};

/// Translates a barred pattern with exactly one bar into the equivalent mesh
/// pattern: the unbarred standardization with the single box shaded where the
/// barred entry sat. Throws std::invalid_argument for any other bar count.
Pattern barred_to_mesh(const BarredPattern& b);

}  // namespace meshkit
