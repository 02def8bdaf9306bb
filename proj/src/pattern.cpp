#include "meshkit/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace meshkit {

BoxSet make_box_set(std::vector<Box> boxes) {
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
  return boxes;
}

RegionConstraint RegionConstraint::shaded(BoxSet boxes) {
  return RegionConstraint(ConstraintKind::Shaded, make_box_set(std::move(boxes)), 0, nullptr);
}

RegionConstraint RegionConstraint::at_least(BoxSet boxes, int count) {
  if (count < 1) throw std::invalid_argument("marked region count must be at least 1");
  return RegionConstraint(ConstraintKind::AtLeast, make_box_set(std::move(boxes)), count, nullptr);
}

RegionConstraint RegionConstraint::avoids(BoxSet boxes, Pattern avoided) {
  return RegionConstraint(ConstraintKind::Avoids, make_box_set(std::move(boxes)), 0,
                          std::make_shared<const Pattern>(std::move(avoided)));
}

bool RegionConstraint::operator==(const RegionConstraint& other) const {
  if (kind_ != other.kind_ || boxes_ != other.boxes_ || count_ != other.count_) return false;
  if (kind_ != ConstraintKind::Avoids) return true;
  return *avoided_ == *other.avoided_;
}

bool RegionConstraint::operator<(const RegionConstraint& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_;
  if (boxes_ != other.boxes_) return boxes_ < other.boxes_;
  if (count_ != other.count_) return count_ < other.count_;
  if (kind_ != ConstraintKind::Avoids) return false;
  return *avoided_ < *other.avoided_;
}

Pattern::Pattern(Permutation word, std::vector<RegionConstraint> constraints) : word_(std::move(word)) {
  const int k = word_.size();
  BoxSet shaded;
  std::vector<RegionConstraint> rest;
  for (auto& c : constraints) {
    if (c.boxes().empty()) throw std::invalid_argument("region constraint with no boxes");
    for (const Box& b : c.boxes()) {
      if (b.col < 0 || b.col > k || b.row < 0 || b.row > k) {
        throw std::invalid_argument("box (" + std::to_string(b.col) + "," + std::to_string(b.row) +
                                    ") outside the grid of a length-" + std::to_string(k) + " pattern");
      }
    }
    if (c.kind() == ConstraintKind::Shaded) {
      shaded.insert(shaded.end(), c.boxes().begin(), c.boxes().end());
    } else {
      rest.push_back(std::move(c));
    }
  }
  std::sort(rest.begin(), rest.end());
  rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
  if (!shaded.empty()) constraints_.push_back(RegionConstraint::shaded(std::move(shaded)));
  for (auto& c : rest) constraints_.push_back(std::move(c));
}

bool Pattern::is_mesh() const {
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [](const auto& c) { return c.kind() == ConstraintKind::Shaded; });
}

bool Pattern::is_marked_mesh() const {
  return std::none_of(constraints_.begin(), constraints_.end(),
                      [](const auto& c) { return c.kind() == ConstraintKind::Avoids; });
}

bool Pattern::has_decorations() const { return !is_marked_mesh(); }

BoxSet Pattern::shaded_boxes() const {
  if (!constraints_.empty() && constraints_.front().kind() == ConstraintKind::Shaded) {
    return constraints_.front().boxes();
  }
  return {};
}

bool Pattern::operator<(const Pattern& other) const {
  if (word_ != other.word_) return word_ < other.word_;
  return std::lexicographical_compare(constraints_.begin(), constraints_.end(), other.constraints_.begin(),
                                      other.constraints_.end());
}

Pattern make_pattern(Permutation word, std::vector<RegionConstraint> constraints) {
  return Pattern(std::move(word), std::move(constraints));
}

Pattern mesh_pattern(Permutation word, std::vector<Box> shaded) {
  if (shaded.empty()) return Pattern(std::move(word));
  return Pattern(std::move(word), {RegionConstraint::shaded(std::move(shaded))});
}

// ---------------------------------------------------------------------------

Box apply_symmetry(Symmetry s, Box b, int k) {
  if (s.transpose) std::swap(b.col, b.row);
  if (s.reverse) b.col = k - b.col;
  if (s.complement) b.row = k - b.row;
  return b;
}

Pattern apply_symmetry_pattern(Symmetry s, const Pattern& pat) {
  const int k = pat.length();
  std::vector<RegionConstraint> out;
  out.reserve(pat.constraints().size());
  for (const auto& c : pat.constraints()) {
    BoxSet boxes;
    boxes.reserve(c.boxes().size());
    for (const Box& b : c.boxes()) boxes.push_back(apply_symmetry(s, b, k));
    switch (c.kind()) {
      case ConstraintKind::Shaded:
        out.push_back(RegionConstraint::shaded(std::move(boxes)));
        break;
      case ConstraintKind::AtLeast:
        out.push_back(RegionConstraint::at_least(std::move(boxes), c.count()));
        break;
      case ConstraintKind::Avoids:
        out.push_back(RegionConstraint::avoids(std::move(boxes), apply_symmetry_pattern(s, c.avoided())));
        break;
    }
  }
  return Pattern(apply_symmetry(s, pat.word()), std::move(out));
}

void dedupe(std::vector<Pattern>& pats) {
  std::sort(pats.begin(), pats.end());
  pats.erase(std::unique(pats.begin(), pats.end()), pats.end());
}

std::vector<Pattern> symmetry_class(const Pattern& pat) {
  std::vector<Pattern> out;
  for (const auto& s : all_symmetries()) out.push_back(apply_symmetry_pattern(s, pat));
  dedupe(out);
  return out;
}

std::vector<Pattern> symmetry_closure(const std::vector<Pattern>& pats) {
  std::vector<Pattern> out;
  for (const auto& p : pats) {
    for (const auto& s : all_symmetries()) out.push_back(apply_symmetry_pattern(s, p));
  }
  dedupe(out);
  return out;
}

// ---------------------------------------------------------------------------

BarredPattern::BarredPattern(Permutation word, std::vector<int> barred)
    : word_(std::move(word)), barred_(std::move(barred)) {
  std::sort(barred_.begin(), barred_.end());
  barred_.erase(std::unique(barred_.begin(), barred_.end()), barred_.end());
  for (int pos : barred_) {
    if (pos < 1 || pos > word_.size()) throw std::invalid_argument("barred position out of range");
  }
  if (!word_.empty() && static_cast<int>(barred_.size()) == word_.size()) {
    throw std::invalid_argument("a barred pattern needs at least one unbarred entry");
  }
}

bool BarredPattern::is_barred(int position) const {
  return std::binary_search(barred_.begin(), barred_.end(), position);
}

Permutation BarredPattern::unbarred_word() const {
  std::vector<int> kept;
  for (int i = 1; i <= word_.size(); ++i) {
    if (!is_barred(i)) kept.push_back(word_(i));
  }
  return standardize(kept);
}

Pattern barred_to_mesh(const BarredPattern& b) {
  if (b.barred().size() != 1) {
    throw std::invalid_argument("only barred patterns with exactly one bar translate to mesh patterns");
  }
  const int pos = b.barred().front();
  const int val = b.word()(pos);
  // Removing the entry at (pos, val) leaves a hole in box (pos-1, val-1) of
  // the smaller grid.
  return mesh_pattern(b.unbarred_word(), {Box{pos - 1, val - 1}});
}

}  // namespace meshkit
