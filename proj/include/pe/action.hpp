#pragma once

#include <vector>

#include "pe/errors.hpp"
#include "pe/group.hpp"
#include "pe/perm.hpp"

namespace pe {

// Left action of `actor` on {0,...,target_size-1}:
//   act[0] = id,  act[h1*h2] = compose(act[h1], act[h2]).
struct LeftActionTable {
  GroupTable actor;
  int target_size = 0;
  std::vector<Perm> act;
};

// Right action: act[0] = id, act[x*y] = compose(act[y], act[x]).
struct RightActionTable {
  GroupTable actor;
  int target_size = 0;
  std::vector<Perm> act;
};

// Laws scanned in order: each act[h] a permutation, act[0] = id, then the
// homomorphism law over actor pairs in lexicographic order. Size
// mismatches throw RangeError.
Checked<LeftActionTable> validate_left_action(const GroupTable& actor,
                                              int target_size,
                                              const std::vector<Perm>& perms);
Checked<RightActionTable> validate_right_action(const GroupTable& actor,
                                                int target_size,
                                                const std::vector<Perm>& perms);

LeftActionTable trivial_left_action(const GroupTable& actor, int target_size);
RightActionTable trivial_right_action(const GroupTable& actor,
                                      int target_size);

// All action tables of `actor` on a set of the given size satisfying the
// left (right=false) or right (right=true) law, in a deterministic order:
// backtracking assigns images at free actor elements in increasing index
// order, candidates in lexicographic order, with forced closure under the
// law after every assignment.
std::vector<std::vector<Perm>> action_homomorphisms(const GroupTable& actor,
                                                    int target_size,
                                                    bool right);

}  // namespace pe
