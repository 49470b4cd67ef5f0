#include "pe/diagnostics.hpp"

#include <algorithm>
#include <set>

#include "pe/left_group.hpp"

namespace pe {

std::vector<std::string> structure_violations(const SolutionTable& s) {
  std::vector<std::string> bad;
  const int n = s.n;

  for (int x = 0; x < n; ++x) {
    Perm row(s.theta.begin() + x * n, s.theta.begin() + (x + 1) * n);
    if (!is_perm(row)) {
      bad.push_back("theta row " + std::to_string(x) + " is not bijective");
      return bad;  // everything below needs permutation rows
    }
  }

  std::vector<int> idem;
  for (int x = 0; x < n; ++x)
    if (s.m(x, x) == x) idem.push_back(x);
  std::vector<char> is_idem(n, 0);
  for (int e : idem) is_idem[e] = 1;

  for (int x = 0; x < n; ++x)
    for (int e : idem)
      if (!is_idem[s.th(x, e)]) {
        bad.push_back("theta_" + std::to_string(x) + " moves idempotent " +
                      std::to_string(e) + " off the idempotents");
        break;
      }

  auto dec = decompose_left_group(s);
  if (!dec.ok()) {
    bad.push_back("left-group decomposition failed: " +
                  dec.violation().message);
    return bad;
  }
  const int one = dec->one;

  // Theta rows of idempotents close into a group with identity id_S.
  {
    std::set<Perm> rows;
    for (int e : idem) rows.insert(theta_row(s, e));
    for (const Perm& p : rows) {
      if (!rows.count(invert(p)))
        bad.push_back("theta rows of idempotents are not inverse closed");
      for (const Perm& q : rows)
        if (!rows.count(compose(p, q))) {
          bad.push_back("theta rows of idempotents are not product closed");
          break;
        }
    }
    if (!rows.count(identity_perm(n)))
      bad.push_back("theta rows of idempotents miss the identity");
    for (int e : idem)
      if (!is_identity(theta_row(s, s.th(e, e)))) {
        bad.push_back("theta_{theta_e(e)} is not the identity for e = " +
                      std::to_string(e));
        break;
      }
  }

  // one * S lies in the kernel of theta.
  for (int x = 0; x < n; ++x)
    if (!is_identity(theta_row(s, s.m(one, x)))) {
      bad.push_back("theta is not trivial on one * S at x = " +
                    std::to_string(x));
      break;
    }

  if (!is_bijective_solution(s)) {
    bad.push_back("pair map is not bijective");
    return bad;  // the inverse-map identities below need it
  }
  const InverseData inv = invert_solution(s);

  // Interplay between the solution and its inverse tables.
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (s.m(inv.p(y, x), inv.c(y, x)) != x) {
        bad.push_back("psi_y(x)(y o x) = x fails at (" + std::to_string(y) +
                      "," + std::to_string(x) + ")");
        y = n;
        break;
      }
      if (s.th(inv.p(y, x), inv.c(y, x)) != y) {
        bad.push_back("theta_{psi_y(x)}(y o x) = y fails at (" +
                      std::to_string(y) + "," + std::to_string(x) + ")");
        y = n;
        break;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (inv.p(s.th(x, y), s.m(x, y)) != x) {
        bad.push_back("psi_{theta_x(y)}(xy) = x fails at (" +
                      std::to_string(x) + "," + std::to_string(y) + ")");
        x = n;
        break;
      }
      if (inv.c(s.th(x, y), s.m(x, y)) != y) {
        bad.push_back("theta_x(y) o (xy) = y fails at (" + std::to_string(x) +
                      "," + std::to_string(y) + ")");
        x = n;
        break;
      }
    }

  // Kernel identities: ker theta meet E = {theta_e(e)} = ker psi meet F,
  // and F = (ker theta meet E) * (one * S).
  {
    std::vector<int> ker_e;
    for (int e : idem)
      if (is_identity(theta_row(s, e))) ker_e.push_back(e);

    std::set<int> thee;
    for (int e : idem) thee.insert(s.th(e, e));
    std::set<int> ker_e_set(ker_e.begin(), ker_e.end());
    if (std::set<int>(thee) != ker_e_set)
      bad.push_back("{theta_e(e)} differs from ker theta meet idempotents");

    std::set<int> f_set;  // idempotents of the o operation
    for (int x = 0; x < n; ++x)
      if (inv.c(x, x) == x) f_set.insert(x);

    std::set<int> ker_psi_f;
    for (int y : f_set) {
      bool ident = true;
      for (int x = 0; x < n; ++x) ident = ident && inv.p(y, x) == x;
      if (ident) ker_psi_f.insert(y);
    }
    if (ker_psi_f != ker_e_set)
      bad.push_back("ker psi meet F differs from ker theta meet idempotents");

    std::set<int> product;
    for (int k : ker_e)
      for (int x = 0; x < n; ++x) product.insert(s.m(k, s.m(one, x)));
    if (product != f_set)
      bad.push_back("(ker theta meet E)(one * S) differs from F");
  }

  // Left congruence: x ~ y iff theta_z(x) = theta_z(y), independent of z.
  {
    auto related = [&](int z, int x, int y) { return s.th(z, x) == s.th(z, y); };
    bool same = true;
    for (int z = 1; z < n && same; ++z)
      for (int x = 0; x < n && same; ++x)
        for (int y = 0; y < n && same; ++y)
          if (related(0, x, y) != related(z, x, y)) same = false;
    if (!same) bad.push_back("theta congruence depends on the base point");

    bool left = true;
    for (int x = 0; x < n && left; ++x)
      for (int y = 0; y < n && left; ++y) {
        if (!related(0, x, y)) continue;
        for (int w = 0; w < n && left; ++w)
          if (!related(0, s.m(w, x), s.m(w, y))) left = false;
      }
    if (!left) bad.push_back("theta congruence is not a left congruence");

    // H_e = {a in eS : a ~ e} is a subgroup of eS with a ~ b iff the
    // cosets aH_e and bH_e agree.
    for (int e : idem) {
      std::set<int> carrier;
      for (int x = 0; x < n; ++x) carrier.insert(s.m(e, x));
      std::set<int> h;
      for (int a : carrier)
        if (related(0, a, e)) h.insert(a);
      bool sub = true;
      for (int a : h)
        for (int b : h) sub = sub && h.count(s.m(a, b));
      for (int a : h) {
        bool has_inverse = false;
        for (int b : h)
          has_inverse = has_inverse || (s.m(a, b) == e && s.m(b, a) == e);
        sub = sub && has_inverse;
      }
      if (!sub) {
        bad.push_back("H_e is not a subgroup of eS for e = " +
                      std::to_string(e));
        continue;
      }
      auto coset = [&](int a) {
        std::set<int> c;
        for (int x : h) c.insert(s.m(a, x));
        return c;
      };
      for (int a : carrier)
        for (int b : carrier)
          if (related(0, a, b) != (coset(a) == coset(b))) {
            bad.push_back("theta congruence differs from H_e cosets for e = " +
                          std::to_string(e));
            a = b = n;
          }
    }
  }

  // Left-zero case: every theta row is the identity or fixed-point free.
  if (dec->group_part.order == 1) {
    for (int x = 0; x < n; ++x) {
      int fixed = 0;
      for (int y = 0; y < n; ++y)
        if (s.th(x, y) == y) ++fixed;
      if (fixed != 0 && fixed != n) {
        bad.push_back("theta row " + std::to_string(x) +
                      " is neither trivial nor fixed-point free");
        break;
      }
    }
  }

  return bad;
}

}  // namespace pe
