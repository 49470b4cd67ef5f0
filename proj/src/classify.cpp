#include "pe/classify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <tuple>

namespace pe {

namespace {

std::vector<int> divisors(int n) {
  std::vector<int> out;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

bool verified(const SolutionTable& s) {
  return !verify_kashaev(s) && is_bijective_solution(s);
}

std::vector<Perm> identity_phi(int order_a, int x_size) {
  return std::vector<Perm>(order_a, identity_perm(x_size));
}

}  // namespace

SolutionDescriptor descriptor_of(const SolutionTable& s) {
  Decomposition d = decompose_solution(s);
  SolutionDescriptor out;
  out.x_size = d.spec.x_size;
  out.order_a = d.spec.mp.A.order;
  out.order_g = d.spec.mp.G.order;
  out.mp_index = -1;
  auto cell = enumerate_matched_pairs(out.order_a, out.order_g);
  for (int i = 0; i < static_cast<int>(cell.size()); ++i)
    if (matched_pair_iso(d.spec.mp, cell[i])) {
      out.mp_index = i;
      break;
    }
  if (out.mp_index < 0)
    throw std::logic_error("descriptor_of: matched pair missing from its cell");
  return out;
}

std::vector<SolutionClass> classify_order(int n) {
  if (n <= 0) throw RangeError("classify_order: order must be positive");
  for (int d : divisors(n))
    if (d > kMaxEnumOrder)
      throw RangeError("classify_order: a divisor exceeds the enumeration bound");
  std::vector<SolutionClass> out;
  for (int k : divisors(n)) {
    const int m = n / k;
    for (int oa : divisors(m)) {
      const int og = m / oa;
      auto cell = enumerate_matched_pairs(oa, og);
      for (int i = 0; i < static_cast<int>(cell.size()); ++i) {
        SolutionClass c;
        c.desc = SolutionDescriptor{k, oa, og, i};
        c.mp = cell[i];
        c.representative =
            build_extension(ExtensionSpec{cell[i], k, identity_phi(oa, k)});
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

std::vector<SolutionClass> classify_involutive(int n) {
  std::vector<SolutionClass> out;
  for (SolutionClass& c : classify_order(n)) {
    if (!is_elementary_abelian_2(c.mp.A) || !is_elementary_abelian_2(c.mp.G))
      continue;
    bool trivial = true;
    for (const Perm& p : c.mp.sigma.act) trivial = trivial && is_identity(p);
    for (const Perm& p : c.mp.delta.act) trivial = trivial && is_identity(p);
    if (trivial) out.push_back(std::move(c));
  }
  return out;
}

std::vector<SolutionTable> brute_force_solutions(int n) {
  if (n < 1 || n > 3)
    throw RangeError("brute_force_solutions: bound is n <= 3");
  std::vector<SolutionTable> out;
  // The pair map is encoded as a permutation of {0,...,n^2-1} with
  // (x,y) at code x*n + y.
  Perm p = identity_perm(n * n);
  do {
    std::vector<int> mult(n * n), theta(n * n);
    for (int code = 0; code < n * n; ++code) {
      mult[code] = p[code] / n;
      theta[code] = p[code] % n;
    }
    SolutionTable s = make_solution(n, std::move(mult), std::move(theta));
    if (!verify_pe(s)) out.push_back(std::move(s));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::optional<Perm> solution_iso_search(const SolutionTable& s,
                                        const SolutionTable& t) {
  if (s.n != t.n) return std::nullopt;
  const int n = s.n;

  using Key = std::tuple<bool, bool, bool, std::vector<int>>;
  auto key_of = [](const SolutionTable& u, int x) {
    std::vector<int> row(u.theta.begin() + x * u.n,
                         u.theta.begin() + (x + 1) * u.n);
    bool perm = is_perm(row);
    std::vector<int> shape;
    if (perm) {
      shape = cycle_type(row);
    } else {
      shape = row;
      std::sort(shape.begin(), shape.end());
    }
    return Key{u.m(x, x) == x, perm, perm && is_identity(row), shape};
  };
  std::vector<Key> ks(n), kt(n);
  for (int x = 0; x < n; ++x) {
    ks[x] = key_of(s, x);
    kt[x] = key_of(t, x);
  }
  {
    auto a = ks, b = kt;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  Perm f(n, -1);
  std::vector<char> used(n, 0);
  auto consistent = [&]() {
    for (int x = 0; x < n; ++x) {
      if (f[x] < 0) continue;
      for (int y = 0; y < n; ++y) {
        if (f[y] < 0) continue;
        int pm = s.m(x, y), pt = s.th(x, y);
        if (f[pm] >= 0 && f[pm] != t.m(f[x], f[y])) return false;
        if (f[pt] >= 0 && f[pt] != t.th(f[x], f[y])) return false;
      }
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || kt[c] != ks[i]) continue;
      f[i] = c;
      used[c] = 1;
      if (consistent() && rec(i + 1)) return true;
      f[i] = -1;
      used[c] = 0;
    }
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

std::optional<Perm> solution_iso(const SolutionTable& s,
                                 const SolutionTable& t) {
  if (s.n != t.n) return std::nullopt;
  if (!verified(s) || !verified(t)) return solution_iso_search(s, t);

  Decomposition ds = decompose_solution(s), dt = decompose_solution(t);
  if (ds.spec.x_size != dt.spec.x_size) return std::nullopt;
  auto mpi = matched_pair_iso(ds.spec.mp, dt.spec.mp);
  if (!mpi) return std::nullopt;

  const int nX = ds.spec.x_size;
  const int nA = dt.spec.mp.A.order, nG = dt.spec.mp.G.order;
  const int n = s.n;

  // Transport s's phi family along (f1, f2), then change phi into t's
  // family; the composite carries s onto t.
  std::vector<Perm> phi_moved(nA);
  const Perm f1_inv = invert(mpi->f1);
  for (int a = 0; a < nA; ++a) phi_moved[a] = ds.spec.phi[f1_inv[a]];
  ExtensionSpec moved{dt.spec.mp, nX, phi_moved};
  std::vector<int> xi = extension_iso_map(moved, dt.spec.phi);

  std::vector<int> t_label_inv(n);
  for (int z = 0; z < n; ++z) t_label_inv[dt.labeling[z]] = z;
  Perm f(n);
  for (int z = 0; z < n; ++z) {
    int idx = ds.labeling[z];
    int alpha = idx / (nA * nG), a = idx / nG % nA, x = idx % nG;
    int moved_idx = (alpha * nA + mpi->f1[a]) * nG + mpi->f2[x];
    f[z] = t_label_inv[xi[moved_idx]];
  }
  for (int z = 0; z < n; ++z)
    for (int w = 0; w < n; ++w)
      if (t.m(f[z], f[w]) != f[s.m(z, w)] || t.th(f[z], f[w]) != f[s.th(z, w)])
        throw std::logic_error("solution_iso: assembled witness failed");
  return f;
}

}  // namespace pe
