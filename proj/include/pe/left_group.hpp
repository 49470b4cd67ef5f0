#pragma once

#include <utility>
#include <vector>

#include "pe/errors.hpp"
#include "pe/group.hpp"
#include "pe/solution.hpp"

namespace pe {

// Coordinates of a left group: the carrier splits as E x G where E is the
// left-zero band of idempotents and G = e0*S is a group.
struct LeftGroupDecomp {
  std::vector<int> idempotents;  // ascending carrier indices
  int base_idempotent = 0;       // e0, the least idempotent
  std::vector<int> carrier;      // group label -> carrier index; carrier[0] = e0
  GroupTable group_part;         // e0*S relabeled with e0 at 0
  std::vector<std::pair<int, int>> coord;  // x -> (index into idempotents,
                                           //       group label of e0*x)
  int one = 0;                   // theta(e0, e0)
};

// Structured check that (S, mult) is a left group. Violation laws, in scan
// order: "associativity", "idempotents" (none exist), "left-zero",
// "group-part", "coordinates", "product-law". Inputs that are not even
// associative yield a report rather than an error so the operation can run
// on arbitrary tables.
Checked<LeftGroupDecomp> decompose_left_group(const SolutionTable& s);

}  // namespace pe
