#include "pe/extension.hpp"

#include <algorithm>
#include <string>

#include "pe/retract.hpp"

namespace pe {

namespace {

void check_spec(const ExtensionSpec& spec) {
  if (spec.x_size <= 0) throw RangeError("extension fiber must be non-empty");
  if (static_cast<int>(spec.phi.size()) != spec.mp.A.order)
    throw RangeError("extension needs one phi permutation per element of A");
  for (const Perm& p : spec.phi) {
    if (static_cast<int>(p.size()) != spec.x_size)
      throw RangeError("phi permutation length differs from fiber size");
    if (!is_perm(p)) throw AxiomError("phi entry is not a permutation");
  }
}

}  // namespace

SolutionTable build_extension(const ExtensionSpec& spec) {
  check_spec(spec);
  const MatchedPair& mp = spec.mp;
  const int nX = spec.x_size, nA = mp.A.order, nG = mp.G.order;
  const int n = nX * nA * nG;
  std::vector<Perm> phi_inv(nA);
  for (int t = 0; t < nA; ++t) phi_inv[t] = invert(spec.phi[t]);

  std::vector<int> mult(n * n), theta(n * n);
  for (int alpha = 0; alpha < nX; ++alpha)
    for (int a = 0; a < nA; ++a)
      for (int x = 0; x < nG; ++x) {
        const int i = (alpha * nA + a) * nG + x;
        for (int beta = 0; beta < nX; ++beta)
          for (int b = 0; b < nA; ++b)
            for (int y = 0; y < nG; ++y) {
              const int j = (beta * nA + b) * nG + y;
              mult[i * n + j] = (alpha * nA + a) * nG + mp.G.prod(x, y);
              const int d = mp.delta.act[x][a];
              const int a_part = mp.A.prod(b, mp.A.inv(d));
              const int x_part = phi_inv[a_part][spec.phi[b][beta]];
              theta[i * n + j] =
                  (x_part * nA + a_part) * nG + mp.sigma.act[d][y];
            }
      }
  SolutionTable s = make_solution(n, std::move(mult), std::move(theta));
  if (verify_kashaev(s) || !is_bijective_solution(s))
    throw std::logic_error("build_extension produced an invalid solution");
  return s;
}

Decomposition decompose_solution(const SolutionTable& s) {
  if (verify_kashaev(s) || !is_bijective_solution(s))
    throw AxiomError("decompose_solution requires a verified bijective solution");
  const int n = s.n;
  const InverseData inv = invert_solution(s);

  // Fiber: idempotents with identity theta row.
  std::vector<int> xs;
  for (int e : ker_theta(s))
    if (s.m(e, e) == e) xs.push_back(e);
  const int nX = static_cast<int>(xs.size());

  RetractResult r = retract_solution(s);
  ExtractedPair ext = extract_matched_pair(r.quotient);
  const int nA = ext.mp.A.order, nG = ext.mp.G.order;
  if (nX * nA * nG != n)
    throw AxiomError("decompose_solution: fiber size does not divide carrier");

  // labeling[z] combines the fiber coordinate of the idempotent of z with
  // the class coordinates of z.
  Decomposition d;
  d.x_elems = xs;
  d.labeling.assign(n, -1);
  std::vector<char> seen(n, 0);
  for (int z = 0; z < n; ++z) {
    int e = -1;
    for (int cand = 0; cand < n; ++cand)
      if (s.m(cand, cand) == cand && s.m(cand, z) == z) {
        e = cand;
        break;
      }
    if (e < 0) throw AxiomError("decompose_solution: no idempotent unit");
    int rep = r.section_rep[r.class_of[e]];
    int alpha = -1;
    for (int i = 0; i < nX; ++i)
      if (inv.c(xs[i], rep) == e) {
        if (alpha >= 0)
          throw AxiomError("decompose_solution: fiber coordinate not unique");
        alpha = i;
      }
    if (alpha < 0)
      throw AxiomError("decompose_solution: fiber coordinate not found");
    int ax = ext.labeling[r.class_of[z]];  // a*|G| + x in the quotient
    int idx = alpha * nA * nG + ax;
    if (seen[idx])
      throw AxiomError("decompose_solution: labeling is not injective");
    seen[idx] = 1;
    d.labeling[z] = idx;
  }

  std::vector<int> elem_at(n);
  for (int z = 0; z < n; ++z) elem_at[d.labeling[z]] = z;

  // eta_{t,b}(beta) = fiber coordinate of theta_{(.,t,1)}(beta,b,1);
  // phi_t is the inverse of eta_{t^{-1},1}.
  auto eta = [&](int t, int b) {
    Perm p(nX);
    const int actor = elem_at[(0 * nA + t) * nG + 0];
    for (int beta = 0; beta < nX; ++beta) {
      const int arg = elem_at[(beta * nA + b) * nG + 0];
      p[beta] = d.labeling[s.th(actor, arg)] / (nA * nG);
    }
    if (!is_perm(p))
      throw AxiomError("decompose_solution: recovered eta is not a permutation");
    return p;
  };
  std::vector<Perm> phi(nA);
  for (int t = 0; t < nA; ++t) phi[t] = invert(eta(ext.mp.A.inv(t), 0));

  d.spec = ExtensionSpec{ext.mp, nX, std::move(phi)};

  SolutionTable built = build_extension(d.spec);
  for (int z = 0; z < n; ++z)
    for (int w = 0; w < n; ++w)
      if (built.m(d.labeling[z], d.labeling[w]) != d.labeling[s.m(z, w)] ||
          built.th(d.labeling[z], d.labeling[w]) != d.labeling[s.th(z, w)])
        throw AxiomError(
            "decompose_solution: labeling does not transport onto the "
            "rebuilt extension");
  return d;
}

std::vector<int> extension_iso_map(const ExtensionSpec& spec,
                                   const std::vector<Perm>& rho) {
  check_spec(spec);
  ExtensionSpec other{spec.mp, spec.x_size, rho};
  check_spec(other);
  const int nX = spec.x_size, nA = spec.mp.A.order, nG = spec.mp.G.order;
  const int n = nX * nA * nG;

  std::vector<Perm> rho_inv(nA);
  for (int a = 0; a < nA; ++a) rho_inv[a] = invert(rho[a]);
  std::vector<int> xi(n);
  for (int alpha = 0; alpha < nX; ++alpha)
    for (int a = 0; a < nA; ++a)
      for (int x = 0; x < nG; ++x)
        xi[(alpha * nA + a) * nG + x] =
            (rho_inv[a][spec.phi[a][alpha]] * nA + a) * nG + x;

  SolutionTable from = build_extension(spec), to = build_extension(other);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (to.m(xi[i], xi[j]) != xi[from.m(i, j)] ||
          to.th(xi[i], xi[j]) != xi[from.th(i, j)])
        throw std::logic_error("extension_iso_map: map is not an isomorphism");
  return xi;
}

}  // namespace pe
