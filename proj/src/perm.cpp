#include "pe/perm.hpp"

#include <algorithm>
#include <numeric>

#include "pe/errors.hpp"

namespace pe {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_perm(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size())
    throw RangeError("compose: permutation sizes differ");
  Perm r(p.size());
  for (int i = 0; i < static_cast<int>(q.size()); ++i) r[i] = p[q[i]];
  return r;
}

Perm invert(const Perm& p) {
  Perm r(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) r[p[i]] = i;
  return r;
}

std::vector<int> cycle_type(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<Perm> all_perms(int n) {
  Perm p = identity_perm(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace pe
