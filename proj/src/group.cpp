#include "pe/group.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>

namespace pe {

Checked<GroupTable> validate_group(int order, const std::vector<int>& table) {
  if (order <= 0) throw RangeError("group order must be positive");
  if (static_cast<int>(table.size()) != order * order)
    throw RangeError("group table must hold order*order entries");
  for (int i = 0; i < order * order; ++i)
    if (table[i] < 0 || table[i] >= order)
      throw RangeError("group table entry out of range at (" +
                       std::to_string(i / order) + "," +
                       std::to_string(i % order) + ")");

  auto at = [&](int x, int y) { return table[x * order + y]; };

  for (int x = 0; x < order; ++x) {
    if (at(0, x) != x)
      return Violation{"identity",
                       {0, x},
                       "identity: product(0," + std::to_string(x) +
                           ") != " + std::to_string(x)};
    if (at(x, 0) != x)
      return Violation{"identity",
                       {x, 0},
                       "identity: product(" + std::to_string(x) +
                           ",0) != " + std::to_string(x)};
  }
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      for (int z = 0; z < order; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          return Violation{"associativity",
                           {x, y, z},
                           "associativity fails at (" + std::to_string(x) +
                               "," + std::to_string(y) + "," +
                               std::to_string(z) + ")"};
  std::vector<int> inverse(order, -1);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y)
      if (at(x, y) == 0 && at(y, x) == 0) {
        inverse[x] = y;
        break;
      }
    if (inverse[x] < 0)
      return Violation{
          "inverse", {x}, "no inverse for element " + std::to_string(x)};
  }
  return GroupTable{order, table, inverse};
}

GroupTable trivial_group() { return cyclic_group(1); }

GroupTable cyclic_group(int n) {
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = (i + j) % n;
  return validate_group(n, t).value();
}

std::vector<int> element_orders(const GroupTable& g) {
  std::vector<int> ord(g.order);
  for (int x = 0; x < g.order; ++x) {
    int p = x, k = 1;
    while (p != 0) {
      p = g.prod(p, x);
      ++k;
    }
    ord[x] = k;
  }
  return ord;
}

bool is_abelian(const GroupTable& g) {
  for (int x = 0; x < g.order; ++x)
    for (int y = x + 1; y < g.order; ++y)
      if (g.prod(x, y) != g.prod(y, x)) return false;
  return true;
}

bool is_elementary_abelian_2(const GroupTable& g) {
  for (int x = 0; x < g.order; ++x)
    if (g.prod(x, x) != 0) return false;
  return is_abelian(g);  // forced for exponent 2, kept as a cheap guard
}

std::string group_name(const GroupTable& g) {
  std::vector<int> key = element_orders(g);
  std::sort(key.begin(), key.end());
  static const std::map<std::vector<int>, std::string> names = {
      {{1}, "C1"},
      {{1, 2}, "C2"},
      {{1, 3, 3}, "C3"},
      {{1, 2, 4, 4}, "C4"},
      {{1, 2, 2, 2}, "C2xC2"},
      {{1, 5, 5, 5, 5}, "C5"},
      {{1, 2, 3, 3, 6, 6}, "C6"},
      {{1, 2, 2, 2, 3, 3}, "S3"},
      {{1, 7, 7, 7, 7, 7, 7}, "C7"},
      {{1, 2, 4, 4, 8, 8, 8, 8}, "C8"},
      {{1, 2, 2, 2, 4, 4, 4, 4}, "C4xC2"},
      {{1, 2, 2, 2, 2, 2, 2, 2}, "C2xC2xC2"},
      {{1, 2, 2, 2, 2, 2, 4, 4}, "D4"},
      {{1, 2, 4, 4, 4, 4, 4, 4}, "Q8"},
  };
  auto it = names.find(key);
  if (it != names.end()) return it->second;
  return "order" + std::to_string(g.order);
}

std::vector<Perm> group_isomorphisms(const GroupTable& g,
                                     const GroupTable& h) {
  std::vector<Perm> out;
  if (g.order != h.order) return out;
  const int n = g.order;
  const std::vector<int> og = element_orders(g), oh = element_orders(h);

  Perm f(n, -1);
  std::vector<char> used(n, 0);
  f[0] = 0;
  used[0] = 1;

  // After each assignment recheck every fully-determined instance of
  // f[xy] = f[x]f[y]; n <= 8 keeps this cheap.
  auto consistent = [&]() {
    for (int x = 0; x < n; ++x) {
      if (f[x] < 0) continue;
      for (int y = 0; y < n; ++y) {
        if (f[y] < 0) continue;
        int p = g.prod(x, y);
        if (f[p] >= 0 && f[p] != h.prod(f[x], f[y])) return false;
      }
    }
    return true;
  };

  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(f);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[t] || oh[t] != og[i]) continue;
      f[i] = t;
      used[t] = 1;
      if (consistent()) rec(i + 1);
      f[i] = -1;
      used[t] = 0;
    }
  };
  rec(1);
  return out;
}

namespace {

// Partial Cayley table with Latin-square masks; -1 marks unknown cells.
struct PartialTable {
  int n;
  std::vector<int> t;
  std::vector<std::uint16_t> row_used, col_used;

  explicit PartialTable(int order)
      : n(order), t(order * order, -1), row_used(order, 0), col_used(order, 0) {}

  int at(int r, int c) const { return t[r * n + c]; }

  bool set(int r, int c, int v) {
    int cur = t[r * n + c];
    if (cur == v) return true;
    if (cur != -1) return false;
    if ((row_used[r] >> v & 1) || (col_used[c] >> v & 1)) return false;
    t[r * n + c] = v;
    row_used[r] |= std::uint16_t(1) << v;
    col_used[c] |= std::uint16_t(1) << v;
    return true;
  }
};

// Closes the partial table under consequences of associativity:
// whenever three of the four products in (xy)z = x(yz) are known the
// fourth is forced. Returns false on contradiction.
bool propagate(PartialTable& p) {
  const int n = p.n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int xy = p.at(x, y);
        if (xy < 0) continue;
        for (int z = 0; z < n; ++z) {
          int yz = p.at(y, z);
          if (yz < 0) continue;
          int l = p.at(xy, z), r = p.at(x, yz);
          if (l >= 0 && r >= 0) {
            if (l != r) return false;
          } else if (l >= 0) {
            if (!p.set(x, yz, l)) return false;
            changed = true;
          } else if (r >= 0) {
            if (!p.set(xy, z, r)) return false;
            changed = true;
          }
        }
      }
  }
  return true;
}

}  // namespace

std::vector<GroupTable> enumerate_group_tables(int order) {
  if (order < 1 || order > kMaxEnumOrder)
    throw RangeError("group enumeration bound exceeded (order must be 1.." +
                     std::to_string(kMaxEnumOrder) + ")");
  std::vector<GroupTable> out;
  PartialTable root(order);
  for (int x = 0; x < order; ++x) {
    root.set(0, x, x);
    root.set(x, 0, x);
  }
  if (!propagate(root)) return out;

  // Branch on the first unknown cell, values ascending; complete tables
  // therefore appear in lexicographic order of the flattened table.
  std::function<void(const PartialTable&)> rec = [&](const PartialTable& p) {
    int cell = -1;
    for (int i = 0; i < order * order && cell < 0; ++i)
      if (p.t[i] < 0) cell = i;
    if (cell < 0) {
      // Complete + Latin + associative + identity implies a group; the
      // validation is kept as an internal assertion.
      out.push_back(validate_group(order, p.t).value());
      return;
    }
    int r = cell / order, c = cell % order;
    for (int v = 0; v < order; ++v) {
      if ((p.row_used[r] >> v & 1) || (p.col_used[c] >> v & 1)) continue;
      PartialTable next = p;
      next.set(r, c, v);
      if (propagate(next)) rec(next);
    }
  };
  rec(root);
  return out;
}

std::vector<GroupTable> enumerate_groups(int order) {
  std::vector<GroupTable> reps;
  for (const GroupTable& g : enumerate_group_tables(order)) {
    bool fresh = true;
    for (const GroupTable& r : reps)
      if (!group_isomorphisms(g, r).empty()) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(g);
  }
  return reps;
}

}  // namespace pe
