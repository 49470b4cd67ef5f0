#pragma once

#include <string>
#include <vector>

#include "pe/errors.hpp"
#include "pe/perm.hpp"

namespace pe {

// Finite group as a Cayley table. Convention: the identity element is
// always index 0. `inverse` is derived during validation.
struct GroupTable {
  int order = 0;
  std::vector<int> product;  // order*order, row-major
  std::vector<int> inverse;

  int prod(int x, int y) const { return product[x * order + y]; }
  int inv(int x) const { return inverse[x]; }
  bool operator==(const GroupTable&) const = default;
};

// Checks identity-at-0, associativity and two-sided inverses, in that
// order, scanning instances lexicographically. Out-of-range entries or a
// wrong-sized table throw RangeError before any axiom is examined.
Checked<GroupTable> validate_group(int order, const std::vector<int>& table);

GroupTable trivial_group();
GroupTable cyclic_group(int n);

// Order of each element (smallest k > 0 with x^k = identity).
std::vector<int> element_orders(const GroupTable& g);
bool is_abelian(const GroupTable& g);
bool is_elementary_abelian_2(const GroupTable& g);

// Conventional name for orders <= 8 (the element-order multiset separates
// all isomorphism classes in that range); "order<N>" beyond that.
std::string group_name(const GroupTable& g);

// All isomorphisms g -> h as permutations f with f[0] = 0 and
// f[xy] = f[x]f[y]; empty when the groups are not isomorphic.
std::vector<Perm> group_isomorphisms(const GroupTable& g, const GroupTable& h);

// Largest order the exhaustive enumerators accept.
inline constexpr int kMaxEnumOrder = 8;

// Every Cayley table of a group of the given order with identity at 0, in
// lexicographic order of the flattened table.
std::vector<GroupTable> enumerate_group_tables(int order);

// One representative per isomorphism class, each the lexicographically
// minimal table of its class, ordered by that minimal table.
std::vector<GroupTable> enumerate_groups(int order);

}  // namespace pe
