#pragma once

#include <vector>

#include "pe/matched_pair.hpp"
#include "pe/solution.hpp"

namespace pe {

// Extension datum: a matched pair, a fiber size |X| and one permutation of
// X per element of A. The phi family is unconstrained; different choices
// give isomorphic solutions.
struct ExtensionSpec {
  MatchedPair mp;
  int x_size = 1;
  std::vector<Perm> phi;  // |A| permutations of {0,...,x_size-1}
};

// Solution on X x A x G (index (alpha*|A| + a)*|G| + x):
//   mult   ((alpha,a,x),(beta,b,y)) = (alpha, a, xy)
//   theta  ((alpha,a,x),(beta,b,y)) =
//     (phi_{b d^{-1}}^{-1}(phi_b(beta)), b d^{-1}, sigma_d(y)),  d = delta_x(a).
// Verified and bijective by construction (internal assertion).
SolutionTable build_extension(const ExtensionSpec& spec);

// Splits a verified bijective solution into its retract's matched pair,
// the fiber X = ker theta intersected with the idempotents, and a
// recovered phi family; labeling[z] is the X x A x G index that
// identifies the input with build_extension(spec).
struct Decomposition {
  ExtensionSpec spec;
  std::vector<int> labeling;
  std::vector<int> x_elems;  // fiber label -> carrier index
};
Decomposition decompose_solution(const SolutionTable& s);

// Carrier bijection (alpha,a,x) -> (rho_a^{-1}(phi_a(alpha)), a, x) from
// build_extension({mp,X,phi}) to build_extension({mp,X,rho}); checked to
// be an isomorphism of solutions before returning.
std::vector<int> extension_iso_map(const ExtensionSpec& spec,
                                   const std::vector<Perm>& rho);

}  // namespace pe
