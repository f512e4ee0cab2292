#include <doctest.h>

#include "tknots/algebra.hpp"

using namespace tknots;

namespace {

IntTable dihedral_under(int n) {
  IntTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = ((2 * b - a) % n + n) % n;
  return t;
}

IntTable trivial_over(int n) {
  IntTable t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = a;
  return t;
}

}  // namespace

TEST_CASE("check_biquandle accepts dihedral tables and the singleton") {
  CHECK(check_biquandle(dihedral_under(3), trivial_over(3)).passed());
  CHECK(check_biquandle({{0}}, {{0}}).passed());
}

TEST_CASE("single mutation of dihedral(3) breaks column bijectivity at b=0") {
  auto under = dihedral_under(3);
  under[0][0] = 1;
  const AxiomReport r = check_biquandle(under, trivial_over(3));
  REQUIRE_FALSE(r.passed());
  bool found = false;
  for (const auto& v : r.violations)
    if (v.axiom == "under-bijective" && v.witness == std::vector<int>{0}) found = true;
  CHECK(found);
  CHECK_THROWS_AS(FiniteBiquandle::from_tables(under, trivial_over(3)), AxiomError);
}

TEST_CASE("malformed tables are input errors") {
  CHECK_THROWS_AS(check_biquandle({{0, 1}, {1}}, trivial_over(2)), InputError);
  CHECK_THROWS_AS(check_biquandle({{0, 5}, {1, 0}}, trivial_over(2)), InputError);
  try {
    check_biquandle(dihedral_under(3), trivial_over(2));
    FAIL("expected a size mismatch");
  } catch (const InputError& e) {
    CHECK(e.code() == ErrorCode::kSizeMismatch);
  }
}

TEST_CASE("check_bset") {
  auto bq = FiniteBiquandle::from_tables(dihedral_under(3), trivial_over(3));
  CHECK(check_bset(bq, dihedral_under(3)).passed());
  IntTable identity(2, std::vector<int>(3));
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 3; ++a) identity[x][a] = x;
  CHECK(check_bset(bq, identity).passed());
  CHECK_THROWS_AS(check_bset(bq, {{0, 1}, {1, 0}}), InputError);

  auto d4 = dihedral(4);
  CHECK_FALSE(d4.strongly_connected());
  CHECK(check_bset(d4.biquandle(), dihedral_under(4)).passed());
}

TEST_CASE("searrow values of the built-in families") {
  auto d3 = dihedral(3);
  REQUIRE(d3.strongly_connected());
  CHECK(d3.searrow(0, 1) == 2);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(d3.searrow(x, y) == (2 * (x + y)) % 3);
  CHECK(dihedral(5).searrow(1, 2) == 4);
  auto a53 = alexander(5, {-3, 1});
  REQUIRE(a53.strongly_connected());
  CHECK(a53.searrow(1, 0) == 4);
  CHECK_THROWS_AS(dihedral(4).searrow(0, 0), ContractError);
  CHECK_FALSE(dihedral(1).strongly_connected());
}

TEST_CASE("solve_S inverts S") {
  auto d3 = dihedral(3);
  CHECK(d3.biquandle().solve_S(1, 2) == std::pair<Element, Element>{0, 1});
  CHECK(dihedral(5).biquandle().solve_S(0, 0) == std::pair<Element, Element>{0, 0});
  for (auto sb : {dihedral(5), alexander(2, {1, 1, 1})}) {
    const auto& bq = sb.biquandle();
    for (int a = 0; a < bq.size(); ++a)
      for (int b = 0; b < bq.size(); ++b) {
        auto [c, d] = bq.S(a, b);
        CHECK(bq.solve_S(c, d) == std::pair<Element, Element>{a, b});
      }
  }
}

TEST_CASE("dihedral and Alexander table entries") {
  auto d3 = dihedral(3);
  CHECK(d3.under(1, 0) == 2);
  CHECK(d3.over(1, 0) == 1);
  CHECK(d3.biquandle().is_quandle());
  CHECK_THROWS_AS(dihedral(0), InputError);

  auto a52 = alexander(5, {-2, 1});
  CHECK(a52.under(1, 0) == 2);
  CHECK(a52.strongly_connected());
  CHECK_FALSE(alexander(5, {-1, 1}).strongly_connected());
  auto a2 = alexander(2, {1, 1, 1});
  CHECK(a2.biquandle_size() == 4);
  CHECK(a2.strongly_connected());
}

TEST_CASE("Alexander ring arithmetic and parameter checks") {
  AlexanderRing r(2, {1, 1, 1});
  const Element t = r.t();
  const Element one_plus_t = r.add(r.from_int(1), t);
  CHECK(r.mul(one_plus_t, t) == r.from_int(1));
  CHECK(r.mul(t, t) == one_plus_t);  // t^2 = -t-1 = t+1
  CHECK(r.label(one_plus_t) == "1+t");
  CHECK_THROWS_AS(AlexanderRing(4, {2, 1}), InputError);
  CHECK_THROWS_AS(AlexanderRing(5, {3}), InputError);
  CHECK_THROWS_AS(AlexanderRing(5, {1, 2}), InputError);
}

TEST_CASE("inverse and searrow identities hold on strongly connected built-ins") {
  for (auto sb : {dihedral(3), dihedral(5), dihedral(7), alexander(5, {-2, 1}),
                  alexander(5, {-3, 1}), alexander(2, {1, 1, 1})}) {
    CAPTURE(sb.name());
    CHECK(check_inverse_identities(sb).passed());
    CHECK(check_searrow_identities(sb).passed());
  }
  CHECK(check_inverse_identities(dihedral(4)).passed());
}

TEST_CASE("inverse tables round-trip") {
  auto sb = alexander(5, {-3, 1});
  const auto& bq = sb.biquandle();
  for (int a = 0; a < bq.size(); ++a)
    for (int b = 0; b < bq.size(); ++b) {
      CHECK(bq.under(bq.under_inv(a, b), b) == a);
      CHECK(bq.over(bq.over_inv(a, b), b) == a);
      CHECK(sb.act(sb.act_inv(a, b), b) == a);
      CHECK(sb.searrow(a, sb.act(a, b)) == b);
    }
}
