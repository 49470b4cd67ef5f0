#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "pe/group.hpp"
#include "pe/matched_pair.hpp"
#include "pe/solution.hpp"

namespace pe::testing {

// mult(x,y) = x, theta(x,y) = y: the identity pair map on n points.
inline SolutionTable identity_solution(int n) {
  std::vector<int> mult(n * n), theta(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      mult[x * n + y] = x;
      theta[x * n + y] = y;
    }
  return make_solution(n, mult, theta);
}

// mult(x,y) = x, theta(x,y) = x xor y.
inline SolutionTable xor_solution() {
  return make_solution(2, {0, 0, 1, 1}, {0, 1, 1, 0});
}

// mult = Z2 table, theta(x,y) = y.
inline SolutionTable z2_mult_solution() {
  return make_solution(2, {0, 1, 1, 0}, {0, 1, 0, 1});
}

// s(x,y) = (y,x): not a solution.
inline SolutionTable flip_solution() {
  return make_solution(2, {0, 1, 0, 1}, {0, 0, 1, 1});
}

inline GroupTable c2() { return cyclic_group(2); }
inline GroupTable c3() { return cyclic_group(3); }
inline GroupTable c4() { return cyclic_group(4); }

// Klein four group as xor on two bits.
inline GroupTable v4() {
  return validate_group(4, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0})
      .value();
}

// Uniformly random total table (usually not a solution).
inline SolutionTable random_table(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(0, n - 1);
  std::vector<int> mult(n * n), theta(n * n);
  for (auto& v : mult) v = d(rng);
  for (auto& v : theta) v = d(rng);
  return make_solution(n, mult, theta);
}

inline std::vector<Perm> random_phi(std::mt19937& rng, int count, int x_size) {
  std::vector<Perm> phi(count);
  for (auto& p : phi) {
    p = identity_perm(x_size);
    std::shuffle(p.begin(), p.end(), rng);
  }
  return phi;
}

}  // namespace pe::testing
