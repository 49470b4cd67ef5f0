#include "pe/action.hpp"

#include <functional>
#include <string>

namespace pe {

namespace {

// Shared scan for both orientations. For right actions the law reads
// act[x*y] = compose(act[y], act[x]), i.e. act[x] is applied first.
std::optional<Violation> scan_action(const GroupTable& actor, int target_size,
                                     const std::vector<Perm>& perms,
                                     bool right) {
  for (int h = 0; h < actor.order; ++h)
    if (!is_perm(perms[h]))
      return Violation{"permutation",
                       {h},
                       "act[" + std::to_string(h) +
                           "] is not a permutation of the target set"};
  if (!is_identity(perms[0]))
    return Violation{"identity-action", {0}, "act[0] is not the identity"};
  for (int h1 = 0; h1 < actor.order; ++h1)
    for (int h2 = 0; h2 < actor.order; ++h2) {
      const Perm want = right ? compose(perms[h2], perms[h1])
                              : compose(perms[h1], perms[h2]);
      if (perms[actor.prod(h1, h2)] != want)
        return Violation{"action-homomorphism",
                         {h1, h2},
                         std::string(right ? "right" : "left") +
                             " action law fails at (" + std::to_string(h1) +
                             "," + std::to_string(h2) + ")"};
    }
  (void)target_size;
  return std::nullopt;
}

void check_sizes(const GroupTable& actor, int target_size,
                 const std::vector<Perm>& perms) {
  if (target_size <= 0) throw RangeError("action target size must be positive");
  if (static_cast<int>(perms.size()) != actor.order)
    throw RangeError("action must provide one permutation per actor element");
  for (const Perm& p : perms)
    if (static_cast<int>(p.size()) != target_size)
      throw RangeError("action permutation length differs from target size");
  for (const Perm& p : perms)
    for (int v : p)
      if (v < 0 || v >= target_size)
        throw RangeError("action permutation entry out of range");
}

}  // namespace

Checked<LeftActionTable> validate_left_action(const GroupTable& actor,
                                              int target_size,
                                              const std::vector<Perm>& perms) {
  check_sizes(actor, target_size, perms);
  if (auto v = scan_action(actor, target_size, perms, false)) return *v;
  return LeftActionTable{actor, target_size, perms};
}

Checked<RightActionTable> validate_right_action(
    const GroupTable& actor, int target_size, const std::vector<Perm>& perms) {
  check_sizes(actor, target_size, perms);
  if (auto v = scan_action(actor, target_size, perms, true)) return *v;
  return RightActionTable{actor, target_size, perms};
}

LeftActionTable trivial_left_action(const GroupTable& actor, int target_size) {
  return LeftActionTable{
      actor, target_size,
      std::vector<Perm>(actor.order, identity_perm(target_size))};
}

RightActionTable trivial_right_action(const GroupTable& actor,
                                      int target_size) {
  return RightActionTable{
      actor, target_size,
      std::vector<Perm>(actor.order, identity_perm(target_size))};
}

std::vector<std::vector<Perm>> action_homomorphisms(const GroupTable& actor,
                                                    int target_size,
                                                    bool right) {
  const int m = actor.order;
  std::vector<std::vector<Perm>> out;
  std::vector<Perm> img(m);
  std::vector<char> known(m, 0);
  img[0] = identity_perm(target_size);
  known[0] = 1;
  if (m == 1) {
    out.push_back(img);
    return out;
  }
  const std::vector<Perm> candidates = all_perms(target_size);

  // Close the partial map under the action law; false on conflict.
  auto closure = [&](std::vector<Perm>& f, std::vector<char>& k) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < m; ++a) {
        if (!k[a]) continue;
        for (int b = 0; b < m; ++b) {
          if (!k[b]) continue;
          Perm want = right ? compose(f[b], f[a]) : compose(f[a], f[b]);
          int p = actor.prod(a, b);
          if (k[p]) {
            if (f[p] != want) return false;
          } else {
            f[p] = std::move(want);
            k[p] = 1;
            changed = true;
          }
        }
      }
    }
    return true;
  };

  std::function<void()> rec = [&]() {
    int free = -1;
    for (int a = 0; a < m && free < 0; ++a)
      if (!known[a]) free = a;
    if (free < 0) {
      out.push_back(img);
      return;
    }
    for (const Perm& cand : candidates) {
      std::vector<Perm> f = img;
      std::vector<char> k = known;
      f[free] = cand;
      k[free] = 1;
      if (!closure(f, k)) continue;
      img.swap(f);
      known.swap(k);
      rec();
      img.swap(f);
      known.swap(k);
    }
  };
  rec();
  return out;
}

}  // namespace pe
