#pragma once

#include <string>
#include <vector>

#include "pe/solution.hpp"

namespace pe {

// Structural facts that hold for every verified bijective solution:
// bijective theta rows, idempotents closed under every theta, left-group
// decomposability, the theta rows of idempotents forming a group, the
// kernel identities tying ker theta, the idempotents of both operations
// and the group part together, the interplay identities of the inverse
// map, the left congruence induced by theta with its coset structure, and
// the fixed-point dichotomy in the left-zero case.
//
// Returns one line per violated fact; empty means the suite passed.
// Intended for verified bijective inputs; anything else is reported, not
// thrown.
std::vector<std::string> structure_violations(const SolutionTable& s);

}  // namespace pe
