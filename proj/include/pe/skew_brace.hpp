#pragma once

#include <vector>

#include "pe/errors.hpp"
#include "pe/group.hpp"
#include "pe/matched_pair.hpp"
#include "pe/solution.hpp"

namespace pe {

/// One carrier with two group operations (B,+,o) sharing identity 0 and
/// linked by a o (b + c) = a o b - a + a o c.  The additive group need not
/// be abelian.
struct SkewBraceTable {
  GroupTable add;
  GroupTable circ;

  int order() const { return add.order; }
};

/// Checks both candidate tables as groups (identity at index 0) and then the
/// compatibility law on every triple.  Law names carry an "add-" or "circ-"
/// prefix for the group axioms; the linking law reports as "compatibility"
/// with the first failing (a,b,c) in lexicographic order.
Checked<SkewBraceTable> validate_skew_brace(int order,
                                            const std::vector<int>& add,
                                            const std::vector<int>& circ);

/// Trivial brace on a group: both operations equal, lambda and rho collapse
/// to the trivial and conjugation actions.
SkewBraceTable trivial_brace(const GroupTable& g);

/// The pair (A, G) with A = G = (B,o), sigma_a(x) = lambda_a(x) = -a + a o x
/// and delta_x(a) = rho_x(a) = (lambda_a(x))^{-1} o a o x, inverses taken in
/// (B,o).  The result is validated; a failure would mean the brace laws were
/// violated upstream, so it throws std::logic_error rather than reporting.
MatchedPair brace_to_matched_pair(const SkewBraceTable& b);

/// construct_solution applied to brace_to_matched_pair(b): a verified,
/// bijective, irretractable solution on order^2 points.
SolutionTable brace_to_solution(const SkewBraceTable& b);

}  // namespace pe
