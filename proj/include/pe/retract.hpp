#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pe/solution.hpp"

namespace pe {

// Quotient of a verified bijective solution by the congruence that glues
// x and y when their left-group coordinates carry the same theta row on
// the idempotent part and the same group part.
struct RetractResult {
  std::vector<int> class_of;     // carrier index -> class index
  std::vector<int> section_rep;  // class index -> least member
  SolutionTable quotient;
};

// Requires a verified bijective solution (throws AxiomError otherwise).
// Class indices are assigned in order of least member; the quotient tables
// are computed on representatives and checked to be representative
// independent, then re-verified as a bijective solution.
RetractResult retract_solution(const SolutionTable& s);

// True iff exactly one idempotent has the identity theta row.
bool is_irretractable(const SolutionTable& s);

// First pair (x,y) where projecting and then applying the quotient map
// disagrees with applying s and then projecting; nullopt when the
// projection is a morphism of solutions.
std::optional<std::pair<int, int>> projection_counterexample(
    const SolutionTable& s, const RetractResult& r);

}  // namespace pe
