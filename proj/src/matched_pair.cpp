#include "pe/matched_pair.hpp"

#include <algorithm>
#include <string>

#include "pe/left_group.hpp"
#include "pe/retract.hpp"

namespace pe {

Checked<MatchedPair> validate_matched_pair(const GroupTable& A,
                                           const GroupTable& G,
                                           const std::vector<Perm>& sigma,
                                           const std::vector<Perm>& delta) {
  auto vs = validate_left_action(A, G.order, sigma);
  if (!vs.ok()) {
    Violation v = vs.violation();
    return Violation{"sigma-" + v.law, v.where, "sigma: " + v.message};
  }
  auto vd = validate_right_action(G, A.order, delta);
  if (!vd.ok()) {
    Violation v = vd.violation();
    return Violation{"delta-" + v.law, v.where, "delta: " + v.message};
  }
  for (int a = 0; a < A.order; ++a)
    for (int x = 0; x < G.order; ++x)
      for (int y = 0; y < G.order; ++y)
        if (sigma[a][G.prod(x, y)] !=
            G.prod(sigma[a][x], sigma[delta[x][a]][y]))
          return Violation{"sigma-product",
                           {a, x, y},
                           "sigma_a(xy) law fails at (a,x,y)=(" +
                               std::to_string(a) + "," + std::to_string(x) +
                               "," + std::to_string(y) + ")"};
  for (int x = 0; x < G.order; ++x)
    for (int a = 0; a < A.order; ++a)
      for (int b = 0; b < A.order; ++b)
        if (delta[x][A.prod(a, b)] !=
            A.prod(delta[sigma[b][x]][a], delta[x][b]))
          return Violation{"delta-product",
                           {x, a, b},
                           "delta_x(ab) law fails at (x,a,b)=(" +
                               std::to_string(x) + "," + std::to_string(a) +
                               "," + std::to_string(b) + ")"};
  return MatchedPair{A, G, *vs, *vd};
}

MatchedPair trivial_matched_pair(const GroupTable& A, const GroupTable& G) {
  return MatchedPair{A, G, trivial_left_action(A, G.order),
                     trivial_right_action(G, A.order)};
}

GroupTable zappa_szep(const MatchedPair& mp) {
  const int nA = mp.A.order, nG = mp.G.order, n = nA * nG;
  std::vector<int> t(n * n);
  for (int x = 0; x < nG; ++x)
    for (int a = 0; a < nA; ++a)
      for (int y = 0; y < nG; ++y)
        for (int b = 0; b < nA; ++b) {
          int gx = mp.G.prod(x, mp.sigma.act[a][y]);
          int ab = mp.A.prod(mp.delta.act[y][a], b);
          t[(x * nA + a) * n + (y * nA + b)] = gx * nA + ab;
        }
  return validate_group(n, t).value();  // a theorem for matched pairs
}

SolutionTable construct_solution(const MatchedPair& mp) {
  const int nA = mp.A.order, nG = mp.G.order, n = nA * nG;
  std::vector<int> mult(n * n), theta(n * n);
  for (int a = 0; a < nA; ++a)
    for (int x = 0; x < nG; ++x)
      for (int b = 0; b < nA; ++b)
        for (int y = 0; y < nG; ++y) {
          int i = a * nG + x, j = b * nG + y;
          mult[i * n + j] = a * nG + mp.G.prod(x, y);
          int dxa = mp.delta.act[x][a];
          theta[i * n + j] =
              mp.A.prod(b, mp.A.inv(dxa)) * nG + mp.sigma.act[dxa][y];
        }
  return make_solution(n, std::move(mult), std::move(theta));
}

std::array<int, 4> invert_constructed(const MatchedPair& mp, int a, int x,
                                      int b, int y) {
  const int nA = mp.A.order, nG = mp.G.order;
  if (a < 0 || a >= nA || b < 0 || b >= nA || x < 0 || x >= nG || y < 0 ||
      y >= nG)
    throw RangeError("invert_constructed: index out of range");
  const Perm sig_a_inv = invert(mp.sigma.act[a]);
  int c = a;
  int u = sig_a_inv[mp.G.prod(mp.sigma.act[a][x], mp.G.inv(y))];
  int dua = mp.delta.act[u][a];
  int v = invert(mp.sigma.act[dua])[y];
  int d = mp.A.prod(b, dua);
  return {c, u, d, v};
}

ExtractedPair extract_matched_pair(const SolutionTable& s) {
  if (verify_kashaev(s) || !is_bijective_solution(s))
    throw AxiomError("extract_matched_pair requires a verified bijective solution");
  if (!is_irretractable(s))
    throw AxiomError("extract_matched_pair requires an irretractable solution");
  auto decc = decompose_left_group(s);
  if (!decc.ok())
    throw AxiomError("extract_matched_pair: " + decc.violation().message);
  const LeftGroupDecomp& dec = *decc;
  const InverseData inv = invert_solution(s);
  const int n = s.n;
  const int one = dec.one;

  // Carrier of a group, `one` labeled 0, remaining elements ascending.
  auto collect = [&](auto&& image) {
    std::vector<char> in(n, 0);
    for (int x = 0; x < n; ++x) in[image(x)] = 1;
    if (!in[one])
      throw AxiomError("extract_matched_pair: identity element missing");
    std::vector<int> elems{one};
    for (int x = 0; x < n; ++x)
      if (in[x] && x != one) elems.push_back(x);
    return elems;
  };
  ExtractedPair out;
  out.a_elems = collect([&](int x) { return inv.c(one, x); });
  out.g_elems = collect([&](int x) { return s.m(one, x); });
  const int nA = static_cast<int>(out.a_elems.size());
  const int nG = static_cast<int>(out.g_elems.size());

  std::vector<int> label_a(n, -1), label_g(n, -1);
  for (int i = 0; i < nA; ++i) label_a[out.a_elems[i]] = i;
  for (int i = 0; i < nG; ++i) label_g[out.g_elems[i]] = i;

  // The A carrier must coincide with the idempotents of mult.
  {
    std::vector<int> sorted_a = out.a_elems;
    std::sort(sorted_a.begin(), sorted_a.end());
    if (sorted_a != dec.idempotents)
      throw AxiomError("extract_matched_pair: one o S differs from the idempotents");
  }

  auto table_from = [&](const std::vector<int>& elems, auto&& op,
                        const std::vector<int>& label, const char* what) {
    const int k = static_cast<int>(elems.size());
    std::vector<int> t(k * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int p = op(elems[i], elems[j]);
        if (label[p] < 0)
          throw AxiomError(std::string("extract_matched_pair: ") + what +
                           " is not closed");
        t[i * k + j] = label[p];
      }
    auto g = validate_group(k, t);
    if (!g.ok())
      throw AxiomError(std::string("extract_matched_pair: ") + what + ": " +
                       g.violation().message);
    return *g;
  };
  GroupTable A = table_from(
      out.a_elems, [&](int p, int q) { return inv.c(p, q); }, label_a,
      "one o S under o");
  GroupTable G = table_from(
      out.g_elems, [&](int p, int q) { return s.m(p, q); }, label_g,
      "one * S under mult");

  // sigma_a(x) = one * theta_a(x); delta_x(a) inverts
  // one o psi_{x^{-1}}(a^{-1}) in A.
  std::vector<Perm> sigma(nA, Perm(nG)), delta(nG, Perm(nA));
  for (int a = 0; a < nA; ++a)
    for (int x = 0; x < nG; ++x) {
      int img = s.m(one, s.th(out.a_elems[a], out.g_elems[x]));
      if (label_g[img] < 0)
        throw AxiomError("extract_matched_pair: sigma image leaves one * S");
      sigma[a][x] = label_g[img];
    }
  for (int x = 0; x < nG; ++x)
    for (int a = 0; a < nA; ++a) {
      int xinv = out.g_elems[G.inv(x)];
      int ainv = out.a_elems[A.inv(a)];
      int img = inv.c(one, inv.p(xinv, ainv));
      if (label_a[img] < 0)
        throw AxiomError("extract_matched_pair: delta image leaves one o S");
      delta[x][a] = A.inv(label_a[img]);
    }

  auto mp = validate_matched_pair(A, G, sigma, delta);
  if (!mp.ok())
    throw AxiomError("extract_matched_pair: recovered data is not a matched pair: " +
                     mp.violation().message);
  out.mp = *mp;

  // Identify the carrier with A x G through z = e(z) * (one * z).
  out.labeling.assign(n, -1);
  std::vector<char> seen(n, 0);
  for (int z = 0; z < n; ++z) {
    int e = -1;
    for (int cand : dec.idempotents)
      if (s.m(cand, z) == z) {
        e = cand;
        break;
      }
    int a = e >= 0 ? label_a[e] : -1;
    int g = label_g[s.m(one, z)];
    if (a < 0 || g < 0)
      throw AxiomError("extract_matched_pair: carrier labeling failed");
    int idx = a * nG + g;
    if (seen[idx])
      throw AxiomError("extract_matched_pair: carrier labeling is not injective");
    seen[idx] = 1;
    out.labeling[z] = idx;
  }

  // The labeling must transport s onto the constructed solution.
  SolutionTable built = construct_solution(out.mp);
  for (int z = 0; z < n; ++z)
    for (int w = 0; w < n; ++w) {
      if (built.m(out.labeling[z], out.labeling[w]) !=
              out.labeling[s.m(z, w)] ||
          built.th(out.labeling[z], out.labeling[w]) !=
              out.labeling[s.th(z, w)])
        throw AxiomError(
            "extract_matched_pair: input is not isomorphic to the "
            "constructed solution");
    }
  return out;
}

std::optional<MatchedPairIso> matched_pair_iso(const MatchedPair& p,
                                               const MatchedPair& q) {
  if (p.A.order != q.A.order || p.G.order != q.G.order) return std::nullopt;
  for (const Perm& f1 : group_isomorphisms(p.A, q.A))
    for (const Perm& f2 : group_isomorphisms(p.G, q.G)) {
      bool ok = true;
      for (int a = 0; a < p.A.order && ok; ++a)
        for (int x = 0; x < p.G.order && ok; ++x)
          if (f2[p.sigma.act[a][x]] != q.sigma.act[f1[a]][f2[x]]) ok = false;
      for (int x = 0; x < p.G.order && ok; ++x)
        for (int a = 0; a < p.A.order && ok; ++a)
          if (f1[p.delta.act[x][a]] != q.delta.act[f2[x]][f1[a]]) ok = false;
      if (ok) return MatchedPairIso{f1, f2};
    }
  return std::nullopt;
}

std::vector<MatchedPair> enumerate_matched_pairs(int order_a, int order_g) {
  std::vector<MatchedPair> reps;
  for (const GroupTable& A : enumerate_groups(order_a))
    for (const GroupTable& G : enumerate_groups(order_g)) {
      const auto sigmas = action_homomorphisms(A, G.order, false);
      const auto deltas = action_homomorphisms(G, A.order, true);
      std::vector<MatchedPair> cell;
      for (const auto& sg : sigmas)
        for (const auto& dl : deltas) {
          auto mp = validate_matched_pair(A, G, sg, dl);
          if (!mp.ok()) continue;
          bool fresh = true;
          for (const MatchedPair& r : cell)
            if (matched_pair_iso(*mp, r)) {
              fresh = false;
              break;
            }
          if (fresh) cell.push_back(*mp);
        }
      // Distinct (A, G) representative cells are never isomorphic to each
      // other, so per-cell deduplication suffices.
      reps.insert(reps.end(), cell.begin(), cell.end());
    }
  return reps;
}

}  // namespace pe
