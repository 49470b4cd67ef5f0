#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "pe/classify.hpp"

using namespace pe;
using namespace pe::testing;

TEST_CASE("descriptor_of pins the canonical examples") {
  auto dx = descriptor_of(xor_solution());
  CHECK(dx.x_size == 1);
  CHECK(dx.order_a == 2);
  CHECK(dx.order_g == 1);
  CHECK(dx.mp_index == 0);

  auto di = descriptor_of(identity_solution(4));
  CHECK(di.x_size == 4);
  CHECK(di.order_a == 1);
  CHECK(di.order_g == 1);

  auto dz = descriptor_of(z2_mult_solution());
  CHECK(dz.x_size == 1);
  CHECK(dz.order_a == 1);
  CHECK(dz.order_g == 2);
}

TEST_CASE("classify_order small counts") {
  CHECK(classify_order(1).size() == 1);

  auto two = classify_order(2);
  REQUIRE(two.size() == 3);
  std::vector<std::array<int, 3>> shapes;
  for (const auto& c : two)
    shapes.push_back({c.desc.x_size, c.desc.order_a, c.desc.order_g});
  std::vector<std::array<int, 3>> expect{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
  std::sort(shapes.begin(), shapes.end());
  std::sort(expect.begin(), expect.end());
  CHECK(shapes == expect);

  CHECK(classify_order(3).size() == 3);
  // factorizations of 4: x=4; x=2 with one Z2 side (2 ways); x=1 with
  // |A||G|=4: cells (1,4) and (4,1) hold two pairs each, (2,2) one
  CHECK(classify_order(4).size() == 8);

  CHECK_THROWS_AS(classify_order(11), RangeError);
}

TEST_CASE("classify_order representatives are sound and non-redundant") {
  for (int n : {2, 3, 4, 6}) {
    auto classes = classify_order(n);
    for (const auto& c : classes) {
      REQUIRE(c.representative.n == n);
      CHECK_FALSE(verify_pe(c.representative).has_value());
      CHECK(is_bijective_solution(c.representative));
      CHECK(descriptor_of(c.representative) == c.desc);
    }
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        CHECK_FALSE(solution_iso(classes[i].representative,
                                 classes[j].representative)
                        .has_value());
  }
}

TEST_CASE("brute_force_solutions") {
  CHECK(brute_force_solutions(1).size() == 1);

  auto two = brute_force_solutions(2);
  CHECK(two.size() == 5);
  for (const auto& s : two) {
    CHECK_FALSE(verify_pe(s).has_value());
    CHECK(is_bijective_solution(s));
  }

  CHECK_THROWS_AS(brute_force_solutions(4), RangeError);
}

TEST_CASE("exhaustive scan matches the classification for n = 2") {
  auto all = brute_force_solutions(2);
  auto classes = classify_order(2);

  // group the scan by isomorphism
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < (int)all.size(); ++i) {
    bool placed = false;
    for (auto& g : groups)
      if (solution_iso_search(all[g[0]], all[i]).has_value()) {
        g.push_back(i);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({i});
  }
  REQUIRE(groups.size() == classes.size());

  std::vector<char> used(classes.size(), 0);
  for (const auto& g : groups) {
    int hit = -1;
    for (int k = 0; k < (int)classes.size(); ++k)
      if (!used[k] &&
          solution_iso_search(all[g[0]], classes[k].representative)) {
        hit = k;
        break;
      }
    REQUIRE(hit >= 0);
    used[hit] = 1;
  }
}

TEST_CASE("solution_iso") {
  auto s = xor_solution();
  auto self = solution_iso(s, s);
  REQUIRE(self.has_value());
  CHECK(*self == identity_perm(2));

  CHECK_FALSE(solution_iso(xor_solution(), z2_mult_solution()).has_value());
  CHECK_FALSE(solution_iso(xor_solution(), identity_solution(2)).has_value());

  // two extensions over the same pair with different families
  MatchedPair mp = trivial_matched_pair(c2(), trivial_group());
  auto a = build_extension({mp, 2, {identity_perm(2), {1, 0}}});
  auto b = build_extension({mp, 2, {identity_perm(2), identity_perm(2)}});
  auto f = solution_iso(a, b);
  REQUIRE(f.has_value());
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      CHECK((*f)[a.m(x, y)] == b.m((*f)[x], (*f)[y]));
      CHECK((*f)[a.th(x, y)] == b.th((*f)[x], (*f)[y]));
    }

  // the witness respects the defining square even on unverified tables
  auto g = solution_iso_search(flip_solution(), flip_solution());
  REQUIRE(g.has_value());
}

TEST_CASE("solution_iso_search agrees with the structural route") {
  std::mt19937 rng(4242);
  auto classes = classify_order(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto& c1 = classes[trial % classes.size()];
    const auto& c2 = classes[(trial * 3 + 1) % classes.size()];
    bool structural =
        solution_iso(c1.representative, c2.representative).has_value();
    bool searched =
        solution_iso_search(c1.representative, c2.representative).has_value();
    REQUIRE(structural == searched);
  }
}

TEST_CASE("classify_involutive matches the involutive filter") {
  for (int n = 1; n <= 6; ++n) {
    auto inv = classify_involutive(n);
    std::vector<SolutionDescriptor> filtered;
    for (const auto& c : classify_order(n))
      if (is_involutive(c.representative)) filtered.push_back(c.desc);
    REQUIRE(inv.size() == filtered.size());
    for (std::size_t i = 0; i < inv.size(); ++i)
      CHECK(inv[i].desc == filtered[i]);
    for (const auto& c : inv) {
      CHECK(is_elementary_abelian_2(c.mp.A));
      CHECK(is_elementary_abelian_2(c.mp.G));
      for (const auto& p : c.mp.sigma.act) CHECK(is_identity(p));
      for (const auto& p : c.mp.delta.act) CHECK(is_identity(p));
    }
  }
}
