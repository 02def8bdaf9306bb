#pragma once

// Preimage bases for the one-pass sorting operators. Given a classical target
// p of length k, the derivation returns marked mesh patterns P with
// op^-1(Av(p)) = Av(P).
//
// Candidates are the words p' of length k in which every value pair inverted
// in p is still inverted. For each inversion a > b of p' at positions i < j:
//
//   the pair survives in p   -> unless a structural entry > a sits where it
//                               blocks the pair from being sorted, mark the
//                               region above a with AtLeast(1)
//   the pair flips in p      -> shade that region; a structural entry inside
//                               it kills the candidate
//
// Stack: region is columns i..j-1, rows a..k; blockers sit strictly between
// positions i and j. Bubble: region is columns 0..j-1, rows a..k; blockers
// sit anywhere left of j other than i.
//
// Merging unions the shadings, removes shaded boxes from every mark region,
// drops a candidate whose mark region empties, and drops any mark region
// containing another one (it is implied).

#include "meshkit/pattern.hpp"
#include "meshkit/report.hpp"
#include "meshkit/sort_ops.hpp"

#include <span>
#include <vector>

namespace meshkit {

struct PreimageBasis {
  Pattern target;
  SortOperator op = SortOperator::Stack;
  /// One member per surviving candidate, ordered by candidate word.
  std::vector<Pattern> patterns;
};

/// Throws std::invalid_argument if `target` carries constraints.
PreimageBasis stack_preimage_basis(const Pattern& target);
PreimageBasis bubble_preimage_basis(const Pattern& target);
PreimageBasis preimage_basis(SortOperator op, const Pattern& target);

/// Replaces every AtLeast(1) region by an explicit point in one of its boxes,
/// branching over the boxes. Shading carries over to the split boxes. The
/// result is sorted, duplicate-free and avoidance-equivalent to {pat}.
/// Throws std::invalid_argument for a count above 1 or a mark box that lies
/// under an Avoids constraint.
std::vector<Pattern> expand_marks(const Pattern& pat);
/// Union of the expansions of each member.
std::vector<Pattern> expand_marks(std::span<const Pattern> pats);

/// Inserts a new point into box b: it becomes entry b.col+1 with value
/// b.row+1, and every constraint box crossing the new lines is split in two.
Pattern insert_point(const Pattern& pat, Box b);

/// Compares {pi : op(pi) avoids target} with Av_n(patterns) for n = 1..n_max.
VerificationReport preimage_verify(const PreimageBasis& basis, int n_max, unsigned workers = 1);

}  // namespace meshkit
