#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pe/errors.hpp"
#include "pe/perm.hpp"

namespace pe {

// Candidate map s(x,y) = (mult(x,y), theta(x,y)) on an n-element carrier.
// Any in-range pair of tables is admissible; being a solution is checked
// by the verify operations. theta(x,y) is row x applied to y.
struct SolutionTable {
  int n = 0;
  std::vector<int> mult, theta;  // n*n, row-major

  int m(int x, int y) const { return mult[x * n + y]; }
  int th(int x, int y) const { return theta[x * n + y]; }
  bool operator==(const SolutionTable&) const = default;
};

// Range-checks entries; throws RangeError.
SolutionTable make_solution(int n, std::vector<int> mult,
                            std::vector<int> theta);

// Pentagon check by literal composition on triples: compares
// s23(s13(s12(t))) with s12(s23(t)) for every triple in lexicographic
// order; nullopt means the equation holds.
struct PeFailure {
  std::array<int, 3> triple;
};
std::optional<PeFailure> verify_pe(const SolutionTable& s);

// Componentwise check of the three equivalent laws, scanned per triple in
// the order PE1 (associativity of mult), PE2, PE3.
enum class KashaevLaw { PE1, PE2, PE3 };
struct KashaevFailure {
  KashaevLaw law;
  std::array<int, 3> triple;
};
std::optional<KashaevFailure> verify_kashaev(const SolutionTable& s);
std::string law_name(KashaevLaw law);

// True iff (x,y) -> (mult(x,y), theta(x,y)) hits every pair exactly once.
bool is_bijective_solution(const SolutionTable& s);

// True iff the pair map composed with itself is the identity.
bool is_involutive(const SolutionTable& s);

// Tables of the inverse pair map, written s^{-1}(x,y) = (psi_y(x), y o x):
//   psi[y][x]  = psi_y(x),   circ[y][x] = y o x.
struct InverseData {
  int n = 0;
  std::vector<int> psi, circ;

  int p(int y, int x) const { return psi[y * n + x]; }
  int c(int y, int x) const { return circ[y * n + x]; }
};

// Requires a bijective pair map; throws AxiomError otherwise.
InverseData invert_solution(const SolutionTable& s);

// Row x of theta as a permutation; throws AxiomError when the row is not
// a bijection (possible only for unverified tables).
Perm theta_row(const SolutionTable& s, int x);

// Elements whose theta row is the identity, ascending.
std::vector<int> ker_theta(const SolutionTable& s);

}  // namespace pe
