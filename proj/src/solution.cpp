#include "pe/solution.hpp"

#include <algorithm>

namespace pe {

SolutionTable make_solution(int n, std::vector<int> mult,
                            std::vector<int> theta) {
  if (n <= 0) throw RangeError("solution size must be positive");
  if (static_cast<int>(mult.size()) != n * n ||
      static_cast<int>(theta.size()) != n * n)
    throw RangeError("solution tables must hold n*n entries");
  for (const auto* t : {&mult, &theta})
    for (int v : *t)
      if (v < 0 || v >= n) throw RangeError("solution table entry out of range");
  return SolutionTable{n, std::move(mult), std::move(theta)};
}

namespace {

struct Triple {
  int a, b, c;
  bool operator==(const Triple&) const = default;
};

}  // namespace

std::optional<PeFailure> verify_pe(const SolutionTable& s) {
  auto s12 = [&](Triple t) { return Triple{s.m(t.a, t.b), s.th(t.a, t.b), t.c}; };
  auto s13 = [&](Triple t) { return Triple{s.m(t.a, t.c), t.b, s.th(t.a, t.c)}; };
  auto s23 = [&](Triple t) { return Triple{t.a, s.m(t.b, t.c), s.th(t.b, t.c)}; };
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z) {
        Triple t{x, y, z};
        if (s23(s13(s12(t))) != s12(s23(t)))
          return PeFailure{{x, y, z}};
      }
  return std::nullopt;
}

std::optional<KashaevFailure> verify_kashaev(const SolutionTable& s) {
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y)
      for (int z = 0; z < s.n; ++z) {
        if (s.m(s.m(x, y), z) != s.m(x, s.m(y, z)))
          return KashaevFailure{KashaevLaw::PE1, {x, y, z}};
        if (s.m(s.th(x, y), s.th(s.m(x, y), z)) != s.th(x, s.m(y, z)))
          return KashaevFailure{KashaevLaw::PE2, {x, y, z}};
        if (s.th(s.th(x, y), s.th(s.m(x, y), z)) != s.th(y, z))
          return KashaevFailure{KashaevLaw::PE3, {x, y, z}};
      }
  return std::nullopt;
}

std::string law_name(KashaevLaw law) {
  switch (law) {
    case KashaevLaw::PE1: return "PE1";
    case KashaevLaw::PE2: return "PE2";
    case KashaevLaw::PE3: return "PE3";
  }
  return "?";
}

bool is_bijective_solution(const SolutionTable& s) {
  std::vector<char> hit(s.n * s.n, 0);
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int code = s.m(x, y) * s.n + s.th(x, y);
      if (hit[code]) return false;
      hit[code] = 1;
    }
  return true;
}

bool is_involutive(const SolutionTable& s) {
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int u = s.m(x, y), v = s.th(x, y);
      if (s.m(u, v) != x || s.th(u, v) != y) return false;
    }
  return true;
}

InverseData invert_solution(const SolutionTable& s) {
  if (!is_bijective_solution(s))
    throw AxiomError("invert_solution: pair map is not bijective");
  InverseData inv;
  inv.n = s.n;
  inv.psi.assign(s.n * s.n, -1);
  inv.circ.assign(s.n * s.n, -1);
  // s(x,y) = (u,v) gives s^{-1}(u,v) = (x,y), read as psi_v(u) = x and
  // v o u = y.
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int u = s.m(x, y), v = s.th(x, y);
      inv.psi[v * s.n + u] = x;
      inv.circ[v * s.n + u] = y;
    }
  return inv;
}

Perm theta_row(const SolutionTable& s, int x) {
  Perm row(s.theta.begin() + x * s.n, s.theta.begin() + (x + 1) * s.n);
  if (!is_perm(row))
    throw AxiomError("theta row " + std::to_string(x) +
                     " is not a permutation");
  return row;
}

std::vector<int> ker_theta(const SolutionTable& s) {
  std::vector<int> ker;
  for (int x = 0; x < s.n; ++x)
    if (is_identity(theta_row(s, x))) ker.push_back(x);
  return ker;
}

}  // namespace pe
