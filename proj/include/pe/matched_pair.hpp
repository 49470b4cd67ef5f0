#pragma once

#include <array>
#include <optional>
#include <vector>

#include "pe/action.hpp"
#include "pe/group.hpp"
#include "pe/solution.hpp"

namespace pe {

// Groups A and G together with a left action sigma of A on the set G and
// a right action delta of G on the set A, compatible through
//   sigma_a(xy) = sigma_a(x) * sigma_{delta_x(a)}(y)
//   delta_x(ab) = delta_{sigma_b(x)}(a) * delta_x(b).
struct MatchedPair {
  GroupTable A, G;
  LeftActionTable sigma;   // actor A, target set G
  RightActionTable delta;  // actor G, target set A
};

// Validates both groups' actions and then the two compatibility laws,
// scanned lexicographically ("sigma-product" over (a,x,y), then
// "delta-product" over (x,a,b)). Size mismatches throw RangeError.
Checked<MatchedPair> validate_matched_pair(const GroupTable& A,
                                           const GroupTable& G,
                                           const std::vector<Perm>& sigma,
                                           const std::vector<Perm>& delta);

MatchedPair trivial_matched_pair(const GroupTable& A, const GroupTable& G);

// Group on G x A (index x*|A| + a) with
//   (x,a)(y,b) = (x sigma_a(y), delta_y(a) b);
// both factors embed as subgroups meeting only in the identity.
GroupTable zappa_szep(const MatchedPair& mp);

// Solution on A x G (index a*|G| + x):
//   s((a,x),(b,y)) = ((a, xy), (b (delta_x(a))^{-1}, sigma_{delta_x(a)}(y))).
// The result is verified, bijective and irretractable by construction.
SolutionTable construct_solution(const MatchedPair& mp);

// Preimage of ((a,x),(b,y)) under the constructed solution, computed from
// the closed formulas rather than by table inversion. Returns {c,u,d,v}
// meaning s((c,u),(d,v)) = ((a,x),(b,y)).
std::array<int, 4> invert_constructed(const MatchedPair& mp, int a, int x,
                                      int b, int y);

// Matched pair recovered from a verified bijective irretractable solution,
// together with the carrier relabeling that identifies the input with
// construct_solution(mp): labeling[z] = a*|G| + x.
struct ExtractedPair {
  MatchedPair mp;
  std::vector<int> labeling;
  std::vector<int> a_elems, g_elems;  // label -> carrier index of the input
};
ExtractedPair extract_matched_pair(const SolutionTable& s);

// Pair of group isomorphisms (f1 : A -> A', f2 : G -> G') intertwining
// both actions; the first one in the deterministic search order, or
// nullopt when the pairs are not isomorphic.
struct MatchedPairIso {
  Perm f1, f2;
};
std::optional<MatchedPairIso> matched_pair_iso(const MatchedPair& p,
                                               const MatchedPair& q);

// All matched pairs with |A| = order_a and |G| = order_g up to matched
// pair isomorphism, in a deterministic order: group representatives from
// enumerate_groups, action tables from action_homomorphisms, compatibility
// filtered, first representative per class kept.
std::vector<MatchedPair> enumerate_matched_pairs(int order_a, int order_g);

}  // namespace pe
