#include <doctest.h>

#include "helpers.hpp"
#include "pe/retract.hpp"
#include "pe/skew_brace.hpp"

using namespace pe;
using namespace pe::testing;

namespace {

std::vector<int> add_mod4() { return cyclic_group(4).product; }
std::vector<int> xor_table() { return v4().product; }

// add = Z4, circ(i,j) = i + j + 2ij mod 4 (a Klein four operation)
SkewBraceTable c4_v4_brace() {
  std::vector<int> circ(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) circ[i * 4 + j] = (i + j + 2 * i * j) % 4;
  return validate_skew_brace(4, add_mod4(), circ).value();
}

// add = xor (Klein four), circ = Z4
SkewBraceTable v4_c4_brace() {
  return validate_skew_brace(4, xor_table(), add_mod4()).value();
}

}  // namespace

TEST_CASE("validate_skew_brace on trivial braces") {
  CHECK(validate_skew_brace(2, {0, 1, 1, 0}, {0, 1, 1, 0}).ok());
  CHECK(validate_skew_brace(1, {0}, {0}).ok());
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_groups(n)) {
      auto b = validate_skew_brace(n, g.product, g.product);
      REQUIRE(b.ok());
    }
}

TEST_CASE("validate_skew_brace rejects a shifted identity") {
  // circ = xor-with-1 has identity element 1, not 0
  std::vector<int> shifted(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) shifted[i * 4 + j] = i ^ j ^ 1;
  auto v = validate_skew_brace(4, add_mod4(), shifted);
  REQUIRE_FALSE(v.ok());
  CHECK(v.violation().law == "circ-identity");
}

TEST_CASE("validate_skew_brace rejects incompatible pairs of groups") {
  // both tables are honest C4 copies (the second has 1 as its square),
  // but the linking law fails first at a o (b + c) with (a,b,c) = (2,1,1)
  std::vector<int> twisted{0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 1, 0, 3, 2, 0, 1};
  REQUIRE(validate_group(4, twisted).ok());
  auto v = validate_skew_brace(4, add_mod4(), twisted);
  REQUIRE_FALSE(v.ok());
  CHECK(v.violation().law == "compatibility");
  CHECK(v.violation().where == std::vector<int>{2, 1, 1});

  // a non-group circ reports with the circ- prefix
  std::vector<int> circ = xor_table();
  std::swap(circ[1 * 4 + 2], circ[1 * 4 + 3]);
  auto w = validate_skew_brace(4, add_mod4(), circ);
  REQUIRE_FALSE(w.ok());
  CHECK(w.violation().law.substr(0, 5) == "circ-");
}

TEST_CASE("the two nontrivial order-4 braces validate") {
  auto b1 = c4_v4_brace();
  CHECK(group_name(b1.add) == "C4");
  CHECK(group_name(b1.circ) == "C2xC2");
  auto b2 = v4_c4_brace();
  CHECK(group_name(b2.add) == "C2xC2");
  CHECK(group_name(b2.circ) == "C4");
}

TEST_CASE("brace_to_matched_pair on trivial braces") {
  // abelian trivial brace: both actions trivial
  auto mp = brace_to_matched_pair(trivial_brace(c2()));
  CHECK(mp.A.product == c2().product);
  CHECK(mp.G.product == c2().product);
  for (const auto& p : mp.sigma.act) CHECK(is_identity(p));
  for (const auto& p : mp.delta.act) CHECK(is_identity(p));

  auto mp3 = brace_to_matched_pair(trivial_brace(c3()));
  for (const auto& p : mp3.sigma.act) CHECK(is_identity(p));
  for (const auto& p : mp3.delta.act) CHECK(is_identity(p));

  // nonabelian trivial brace: lambda trivial, rho = conjugation
  GroupTable s3;
  for (const auto& g : enumerate_groups(6))
    if (group_name(g) == "S3") s3 = g;
  auto mps = brace_to_matched_pair(trivial_brace(s3));
  for (const auto& p : mps.sigma.act) CHECK(is_identity(p));
  bool some_nontrivial = false;
  for (int x = 0; x < 6; ++x) {
    for (int a = 0; a < 6; ++a)
      CHECK(mps.delta.act[x][a] == s3.prod(s3.prod(s3.inv(x), a), x));
    some_nontrivial = some_nontrivial || !is_identity(mps.delta.act[x]);
  }
  CHECK(some_nontrivial);
}

TEST_CASE("brace_to_matched_pair on the mixed order-4 braces") {
  // lambda_a(b) = -a + a o b, computed pointwise and validated
  auto b = v4_c4_brace();
  auto mp = brace_to_matched_pair(b);
  for (int a = 0; a < 4; ++a)
    for (int x = 0; x < 4; ++x)
      CHECK(mp.sigma.act[a][x] ==
            b.add.prod(b.add.inv(a), b.circ.prod(a, x)));
  CHECK(mp.sigma.act[1] == Perm{0, 3, 2, 1});
  CHECK(validate_matched_pair(mp.A, mp.G, mp.sigma.act, mp.delta.act).ok());

  auto mp2 = brace_to_matched_pair(c4_v4_brace());
  CHECK(validate_matched_pair(mp2.A, mp2.G, mp2.sigma.act, mp2.delta.act).ok());
}

TEST_CASE("brace_to_solution") {
  // trivial brace on one point
  CHECK(brace_to_solution(trivial_brace(trivial_group())).n == 1);

  // trivial brace on Z2: a verified 4-point solution
  auto s = brace_to_solution(trivial_brace(c2()));
  CHECK(s.n == 4);
  CHECK_FALSE(verify_pe(s).has_value());
  CHECK(is_bijective_solution(s));
  CHECK(is_irretractable(s));

  // every brace of order <= 4 used here gives a verified solution
  for (const auto& b : {c4_v4_brace(), v4_c4_brace(), trivial_brace(c4()),
                        trivial_brace(v4()), trivial_brace(c3())}) {
    auto t = brace_to_solution(b);
    CHECK_FALSE(verify_pe(t).has_value());
    CHECK(is_bijective_solution(t));
    CHECK(is_irretractable(t));
  }
}
