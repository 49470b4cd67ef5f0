#pragma once

#include <optional>
#include <vector>

#include "pe/extension.hpp"
#include "pe/matched_pair.hpp"
#include "pe/solution.hpp"

namespace pe {

// Complete isomorphism invariant of a finite bijective solution: the fiber
// size and the matched pair class of its retract, the latter addressed by
// component orders plus position in enumerate_matched_pairs.
struct SolutionDescriptor {
  int x_size = 1;
  int order_a = 1, order_g = 1;
  int mp_index = 0;
  bool operator==(const SolutionDescriptor&) const = default;
};

struct SolutionClass {
  SolutionDescriptor desc;
  MatchedPair mp;
  SolutionTable representative;  // build_extension with identity phi
};

// Descriptor of a verified bijective solution; locates the retract's
// matched pair within its enumeration cell.
SolutionDescriptor descriptor_of(const SolutionTable& s);

// All isomorphism classes of bijective solutions of the given size:
// fiber sizes k | n ascending, then |A| | (n/k) ascending, then the
// enumeration order of the matched pair cell.
std::vector<SolutionClass> classify_order(int n);

// Classes whose solutions square to the identity: both component groups
// elementary abelian 2-groups and both actions trivial (a structural
// filter, deliberately independent of is_involutive).
std::vector<SolutionClass> classify_involutive(int n);

// Every total table on n points whose pair map is a permutation of pairs
// and satisfies the pentagon check, in lexicographic order of the encoded
// pair map. Bound: n <= 3.
std::vector<SolutionTable> brute_force_solutions(int n);

// Witness search over carrier bijections respecting cheap invariants
// (idempotency, kernel membership, theta row cycle type). Works on
// arbitrary tables; exponential in the worst case.
std::optional<Perm> solution_iso_search(const SolutionTable& s,
                                        const SolutionTable& t);

// Isomorphism witness or nullopt. Verified inputs are compared through
// their descriptors and the witness is assembled from the matched pair
// isomorphism and the phi-change map; anything else falls back to
// solution_iso_search.
std::optional<Perm> solution_iso(const SolutionTable& s,
                                 const SolutionTable& t);

}  // namespace pe
