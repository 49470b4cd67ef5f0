#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pe/left_group.hpp"
#include "pe/solution.hpp"

using namespace pe;
using namespace pe::testing;

TEST_CASE("make_solution range checks") {
  CHECK_THROWS_AS(make_solution(2, {0, 0, 1}, {0, 1, 0, 1}), RangeError);
  CHECK_THROWS_AS(make_solution(2, {0, 0, 1, 2}, {0, 1, 0, 1}), RangeError);
  CHECK_THROWS_AS(make_solution(0, {}, {}), RangeError);
}

TEST_CASE("verify_pe on the canonical tables") {
  CHECK_FALSE(verify_pe(identity_solution(1)));
  CHECK_FALSE(verify_pe(identity_solution(3)));
  CHECK_FALSE(verify_pe(xor_solution()));
  CHECK_FALSE(verify_pe(z2_mult_solution()));
  auto f = verify_pe(flip_solution());
  REQUIRE(f.has_value());
  CHECK(f->triple == std::array<int, 3>{0, 1, 0});
}

TEST_CASE("verify_kashaev law reporting") {
  CHECK_FALSE(verify_kashaev(xor_solution()));
  CHECK_FALSE(verify_kashaev(z2_mult_solution()));

  // the flip map violates PE2 and PE3 on every triple with x != y; the
  // per-triple scan reports PE2 first, and a PE3 violation exists too
  auto f = verify_kashaev(flip_solution());
  REQUIRE(f.has_value());
  CHECK(f->law == KashaevLaw::PE2);
  CHECK(f->triple == std::array<int, 3>{0, 1, 0});
  CHECK(law_name(f->law) == "PE2");

  const SolutionTable s = flip_solution();
  bool pe3_fails = false;  // theta_{theta_x(y)} theta_{xy}(z) = x, but
  for (int x = 0; x < 2; ++x)  // theta_y(z) = y
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        pe3_fails =
            pe3_fails || s.th(s.th(x, y), s.th(s.m(x, y), z)) != s.th(y, z);
  CHECK(pe3_fails);

  // non-associative mult: PE1 at (0,0,1), the first triple where the
  // bracketings differ
  auto g = verify_kashaev(make_solution(2, {1, 0, 0, 0}, {0, 1, 0, 1}));
  REQUIRE(g.has_value());
  CHECK(g->law == KashaevLaw::PE1);
  CHECK(g->triple == std::array<int, 3>{0, 0, 1});
  CHECK(law_name(KashaevLaw::PE1) == "PE1");
  CHECK(law_name(KashaevLaw::PE3) == "PE3");
}

TEST_CASE("verify_pe agrees with verify_kashaev on every n=2 table") {
  for (int mc = 0; mc < 16; ++mc)
    for (int tc = 0; tc < 16; ++tc) {
      std::vector<int> mult(4), theta(4);
      for (int i = 0; i < 4; ++i) {
        mult[i] = (mc >> i) & 1;
        theta[i] = (tc >> i) & 1;
      }
      auto s = make_solution(2, mult, theta);
      REQUIRE(verify_pe(s).has_value() == verify_kashaev(s).has_value());
    }
}

TEST_CASE("verify_pe agrees with verify_kashaev on random n=3,4 tables") {
  std::mt19937 rng(20240817);
  for (int n : {3, 4})
    for (int trial = 0; trial < 1000; ++trial) {
      auto s = random_table(rng, n);
      REQUIRE(verify_pe(s).has_value() == verify_kashaev(s).has_value());
    }
}

TEST_CASE("is_bijective_solution") {
  CHECK(is_bijective_solution(xor_solution()));
  CHECK(is_bijective_solution(identity_solution(2)));
  CHECK_FALSE(is_bijective_solution(make_solution(2, {0, 0, 1, 1},
                                                  {0, 0, 0, 0})));
}

TEST_CASE("invert_solution tables") {
  // s = id: psi(y,x) = x and y o x = y
  auto inv_id = invert_solution(identity_solution(2));
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) {
      CHECK(inv_id.p(y, x) == x);
      CHECK(inv_id.c(y, x) == y);
    }

  // xor: psi(y,x) = x and y o x = x xor y
  auto inv_xor = invert_solution(xor_solution());
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) {
      CHECK(inv_xor.p(y, x) == x);
      CHECK(inv_xor.c(y, x) == (x ^ y));
    }

  // mult = Z2, theta(x,y) = y: psi(y,x) = x y^{-1} = x xor y, y o x = y
  auto inv_zm = invert_solution(z2_mult_solution());
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) {
      CHECK(inv_zm.p(y, x) == (x ^ y));
      CHECK(inv_zm.c(y, x) == y);
    }

  CHECK_THROWS_AS(invert_solution(make_solution(2, {0, 0, 1, 1}, {0, 0, 0, 0})),
                  AxiomError);
}

TEST_CASE("interplay identities of the inverse tables") {
  for (const auto& s : {identity_solution(3), xor_solution(),
                        z2_mult_solution()}) {
    auto inv = invert_solution(s);
    for (int y = 0; y < s.n; ++y)
      for (int x = 0; x < s.n; ++x) {
        CHECK(s.m(inv.p(y, x), inv.c(y, x)) == x);
        CHECK(s.th(inv.p(y, x), inv.c(y, x)) == y);
        CHECK(inv.p(s.th(y, x), s.m(y, x)) == y);
        CHECK(inv.c(s.th(y, x), s.m(y, x)) == x);
      }
  }
}

TEST_CASE("decompose_left_group") {
  auto dx = decompose_left_group(xor_solution());
  REQUIRE(dx.ok());
  CHECK(dx->idempotents == std::vector<int>{0, 1});
  CHECK(dx->group_part.order == 1);
  CHECK(dx->one == 0);

  auto dz = decompose_left_group(z2_mult_solution());
  REQUIRE(dz.ok());
  CHECK(dz->idempotents == std::vector<int>{0});
  CHECK(dz->group_part.order == 2);
  CHECK(dz->one == 0);

  // right-zero multiplication: idempotents fail the left-zero law
  auto dr = decompose_left_group(flip_solution());
  REQUIRE_FALSE(dr.ok());
  CHECK(dr.violation().law == "left-zero");
  CHECK(dr.violation().where == std::vector<int>{0, 1});

  // max(x,y) is associative but its idempotents are not left-zero
  auto dm = decompose_left_group(make_solution(2, {0, 1, 1, 1}, {0, 1, 0, 1}));
  REQUIRE_FALSE(dm.ok());
  CHECK(dm.violation().law == "left-zero");

  // non-associative mult is rejected up front: (0*0)*1 = 0 but 0*(0*1) = 1
  auto dn = decompose_left_group(make_solution(2, {1, 0, 0, 0}, {0, 1, 0, 1}));
  REQUIRE_FALSE(dn.ok());
  CHECK(dn.violation().law == "associativity");
  CHECK(dn.violation().where == std::vector<int>{0, 0, 1});
}

TEST_CASE("theta_row and ker_theta") {
  CHECK(theta_row(xor_solution(), 1) == Perm{1, 0});
  CHECK(ker_theta(xor_solution()) == std::vector<int>{0});
  CHECK(ker_theta(identity_solution(2)) == std::vector<int>{0, 1});
  CHECK(ker_theta(z2_mult_solution()) == std::vector<int>{0, 1});
  CHECK_THROWS_AS(theta_row(make_solution(2, {0, 0, 1, 1}, {0, 0, 0, 1}), 0),
                  AxiomError);
}

TEST_CASE("is_involutive") {
  CHECK(is_involutive(identity_solution(4)));
  CHECK(is_involutive(xor_solution()));
  CHECK(is_involutive(z2_mult_solution()));
  // mult = Z3, theta(x,y) = y: s^2(x,y) = (x + 2y, y) != (x,y)
  auto z3m = make_solution(3, {0, 1, 2, 1, 2, 0, 2, 0, 1},
                           {0, 1, 2, 0, 1, 2, 0, 1, 2});
  CHECK_FALSE(verify_pe(z3m).has_value());
  CHECK_FALSE(is_involutive(z3m));
}
