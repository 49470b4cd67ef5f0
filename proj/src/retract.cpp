#include "pe/retract.hpp"

#include <map>
#include <utility>

#include "pe/left_group.hpp"

namespace pe {

RetractResult retract_solution(const SolutionTable& s) {
  if (verify_kashaev(s) || !is_bijective_solution(s))
    throw AxiomError("retract_solution requires a verified bijective solution");
  auto dec = decompose_left_group(s);
  if (!dec.ok())
    throw AxiomError("retract_solution: " + dec.violation().message);
  const int n = s.n;
  const int one = dec->one;

  // Key: (theta row of the idempotent coordinate, group part one*x).
  RetractResult r;
  r.class_of.assign(n, -1);
  std::map<std::pair<Perm, int>, int> ids;
  for (int x = 0; x < n; ++x) {
    int e = dec->idempotents[dec->coord[x].first];
    std::pair<Perm, int> key{theta_row(s, e), s.m(one, x)};
    auto [it, fresh] = ids.try_emplace(key, static_cast<int>(r.section_rep.size()));
    if (fresh) r.section_rep.push_back(x);
    r.class_of[x] = it->second;
  }

  // The same classes must arise from raw theta-row equality; this holds
  // for every verified solution and guards the precondition.
  {
    std::map<std::pair<Perm, int>, int> raw;
    std::vector<int> raw_class(n, -1);
    for (int x = 0; x < n; ++x) {
      std::pair<Perm, int> key{theta_row(s, x), s.m(one, x)};
      auto [it, fresh] = raw.try_emplace(key, x);
      raw_class[x] = it->second;
      (void)fresh;
    }
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        bool a = r.class_of[x] == r.class_of[y];
        bool b = raw_class[x] == raw_class[y];
        if (a != b)
          throw AxiomError(
              "retract_solution: coordinate classes disagree with theta-row "
              "classes (input is not a verified solution)");
      }
  }

  const int q = static_cast<int>(r.section_rep.size());
  std::vector<int> qmult(q * q), qtheta(q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      int a = r.section_rep[i], b = r.section_rep[j];
      qmult[i * q + j] = r.class_of[s.m(a, b)];
      qtheta[i * q + j] = r.class_of[s.th(a, b)];
    }
  r.quotient = make_solution(q, std::move(qmult), std::move(qtheta));

  if (auto bad = projection_counterexample(s, r))
    throw AxiomError("retract_solution: quotient is representative dependent");
  if (verify_kashaev(r.quotient) || !is_bijective_solution(r.quotient))
    throw AxiomError("retract_solution: quotient is not a bijective solution");
  return r;
}

bool is_irretractable(const SolutionTable& s) {
  int kernel_idempotents = 0;
  for (int x = 0; x < s.n; ++x)
    if (s.m(x, x) == x && is_identity(theta_row(s, x))) ++kernel_idempotents;
  return kernel_idempotents == 1;
}

std::optional<std::pair<int, int>> projection_counterexample(
    const SolutionTable& s, const RetractResult& r) {
  for (int x = 0; x < s.n; ++x)
    for (int y = 0; y < s.n; ++y) {
      int cx = r.class_of[x], cy = r.class_of[y];
      if (r.class_of[s.m(x, y)] != r.quotient.m(cx, cy) ||
          r.class_of[s.th(x, y)] != r.quotient.th(cx, cy))
        return std::make_pair(x, y);
    }
  return std::nullopt;
}

}  // namespace pe
