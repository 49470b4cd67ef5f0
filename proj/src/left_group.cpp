#include "pe/left_group.hpp"

#include <algorithm>
#include <string>

namespace pe {

Checked<LeftGroupDecomp> decompose_left_group(const SolutionTable& s) {
  const int n = s.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (s.m(s.m(x, y), z) != s.m(x, s.m(y, z)))
          return Violation{"associativity",
                           {x, y, z},
                           "mult is not associative at (" + std::to_string(x) +
                               "," + std::to_string(y) + "," +
                               std::to_string(z) + ")"};

  LeftGroupDecomp d;
  for (int x = 0; x < n; ++x)
    if (s.m(x, x) == x) d.idempotents.push_back(x);
  if (d.idempotents.empty())
    return Violation{"idempotents", {}, "no idempotent element"};
  for (int e : d.idempotents)
    for (int f : d.idempotents)
      if (s.m(e, f) != e)
        return Violation{"left-zero",
                         {e, f},
                         "idempotents are not a left-zero band at (" +
                             std::to_string(e) + "," + std::to_string(f) + ")"};
  d.base_idempotent = d.idempotents.front();
  const int e0 = d.base_idempotent;

  // Carrier of the group part, e0 first, remaining elements ascending.
  std::vector<char> in_carrier(n, 0);
  for (int x = 0; x < n; ++x) in_carrier[s.m(e0, x)] = 1;
  d.carrier.push_back(e0);
  for (int x = 0; x < n; ++x)
    if (in_carrier[x] && x != e0) d.carrier.push_back(x);
  const int gsize = static_cast<int>(d.carrier.size());
  std::vector<int> label(n, -1);
  for (int i = 0; i < gsize; ++i) label[d.carrier[i]] = i;

  std::vector<int> table(gsize * gsize);
  for (int i = 0; i < gsize; ++i)
    for (int j = 0; j < gsize; ++j) {
      int p = s.m(d.carrier[i], d.carrier[j]);
      if (label[p] < 0)
        return Violation{"group-part",
                         {d.carrier[i], d.carrier[j]},
                         "e0*S is not closed under mult"};
      table[i * gsize + j] = label[p];
    }
  auto gp = validate_group(gsize, table);
  if (!gp.ok()) {
    Violation v = gp.violation();
    return Violation{"group-part", v.where, "e0*S: " + v.message};
  }
  d.group_part = *gp;

  d.coord.resize(n);
  std::vector<char> used(n, 0);
  for (int x = 0; x < n; ++x) {
    int which = -1;
    for (int i = 0; i < static_cast<int>(d.idempotents.size()); ++i)
      if (s.m(d.idempotents[i], x) == x) {
        if (which >= 0)
          return Violation{"coordinates",
                           {x},
                           "element " + std::to_string(x) +
                               " has several idempotent units"};
        which = i;
      }
    if (which < 0)
      return Violation{"coordinates",
                       {x},
                       "element " + std::to_string(x) +
                           " has no idempotent unit"};
    int g = label[s.m(e0, x)];
    d.coord[x] = {which, g};
    int flat = which * gsize + g;
    if (used[flat])
      return Violation{"coordinates",
                       {x},
                       "coordinate map is not injective at " +
                           std::to_string(x)};
    used[flat] = 1;
  }
  if (static_cast<int>(d.idempotents.size()) * gsize != n)
    return Violation{"coordinates", {}, "|E|*|G| differs from carrier size"};

  // mult must act as (e,g)(f,h) = (e, gh) in coordinates.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [ex, gx] = d.coord[x];
      auto [ey, gy] = d.coord[y];
      (void)ey;
      auto [ep, gp2] = d.coord[s.m(x, y)];
      if (ep != ex || gp2 != d.group_part.prod(gx, gy))
        return Violation{"product-law",
                         {x, y},
                         "mult does not match the E x G product at (" +
                             std::to_string(x) + "," + std::to_string(y) + ")"};
    }

  d.one = s.th(e0, e0);
  return d;
}

}  // namespace pe
