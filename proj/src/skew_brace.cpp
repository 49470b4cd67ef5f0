#include "pe/skew_brace.hpp"

#include <stdexcept>

namespace pe {

Checked<SkewBraceTable> validate_skew_brace(int order,
                                            const std::vector<int>& add,
                                            const std::vector<int>& circ) {
  auto a = validate_group(order, add);
  if (!a.ok()) {
    Violation v = a.violation();
    v.law = "add-" + v.law;
    return Checked<SkewBraceTable>(v);
  }
  auto c = validate_group(order, circ);
  if (!c.ok()) {
    Violation v = c.violation();
    v.law = "circ-" + v.law;
    return Checked<SkewBraceTable>(v);
  }

  SkewBraceTable b{*a, *c};
  // a o (b + c) = (a o b) + (-a) + (a o c), the + side associates freely
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      for (int z = 0; z < order; ++z) {
        int lhs = b.circ.prod(x, b.add.prod(y, z));
        int rhs = b.add.prod(b.add.prod(b.circ.prod(x, y), b.add.inv(x)),
                             b.circ.prod(x, z));
        if (lhs != rhs)
          return Checked<SkewBraceTable>(Violation{
              "compatibility",
              {x, y, z},
              "a o (b + c) != a o b - a + a o c at (" + std::to_string(x) +
                  "," + std::to_string(y) + "," + std::to_string(z) + ")"});
      }
  return Checked<SkewBraceTable>(std::move(b));
}

SkewBraceTable trivial_brace(const GroupTable& g) { return SkewBraceTable{g, g}; }

MatchedPair brace_to_matched_pair(const SkewBraceTable& b) {
  const int n = b.order();
  LeftActionTable sigma;
  sigma.actor = b.circ;
  sigma.target_size = n;
  sigma.act.assign(n, Perm(n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x)
      sigma.act[a][x] = b.add.prod(b.add.inv(a), b.circ.prod(a, x));

  RightActionTable delta;
  delta.actor = b.circ;
  delta.target_size = n;
  delta.act.assign(n, Perm(n));
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      delta.act[x][a] =
          b.circ.prod(b.circ.prod(b.circ.inv(sigma.act[a][x]), a), x);

  auto mp = validate_matched_pair(b.circ, b.circ, sigma.act, delta.act);
  if (!mp.ok())
    throw std::logic_error("valid brace produced an invalid pair: " +
                           mp.violation().message);
  return *mp;
}

SolutionTable brace_to_solution(const SkewBraceTable& b) {
  return construct_solution(brace_to_matched_pair(b));
}

}  // namespace pe
