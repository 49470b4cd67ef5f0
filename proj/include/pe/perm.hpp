#pragma once

#include <vector>

#include "pe/errors.hpp"

namespace pe {

// A permutation of {0,...,n-1}; p[i] is the image of i.
using Perm = std::vector<int>;

Perm identity_perm(int n);
bool is_perm(const Perm& p);
bool is_identity(const Perm& p);

// compose(p, q) applies q first: result[i] = p[q[i]].
Perm compose(const Perm& p, const Perm& q);
Perm invert(const Perm& p);

// Sorted cycle lengths, fixed points included.
std::vector<int> cycle_type(const Perm& p);

// All permutations of {0,...,n-1} in lexicographic order.
std::vector<Perm> all_perms(int n);

}  // namespace pe
