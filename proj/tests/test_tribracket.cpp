#include <doctest.h>

#include "tknots/tribracket.hpp"

using namespace tknots;

TEST_CASE("closed-form tribrackets validate") {
  auto d3 = dihedral_tribracket(3);
  CHECK(d3(1, 2, 0) == 2);
  for (int x = 0; x < 3; ++x)
    for (int z = 0; z < 3; ++z) CHECK(d3(x, x, z) == z);
  auto a5 = alexander_tribracket(5, {-2, 1});
  CHECK(a5(1, 1, 4) == 4);
  CHECK(check_tribracket(a5.to_cube()).passed());
}

TEST_CASE("duplicate entry breaks H1-i") {
  auto cube = dihedral_tribracket(3).to_cube();
  cube[0][0][1] = cube[0][0][0];
  auto r = check_tribracket(cube);
  REQUIRE_FALSE(r.passed());
  bool found = false;
  for (const auto& v : r.violations)
    if (v.axiom == "H1-i" && v.witness == std::vector<int>{0, 0}) found = true;
  CHECK(found);
  CHECK_THROWS_AS(HorizontalTribracket::from_table({{{0, 1}}}), InputError);
}

TEST_CASE("corresponding tribracket of the built-ins") {
  auto t3 = corresponding_tribracket(dihedral(3));
  CHECK(t3 == dihedral_tribracket(3));
  CHECK(t3(0, 1, 2) == 1);
  CHECK(corresponding_tribracket(dihedral(5)) == dihedral_tribracket(5));
  CHECK(corresponding_tribracket(alexander(5, {-2, 1})) == alexander_tribracket(5, {-2, 1}));
  auto t4 = corresponding_tribracket(alexander(2, {1, 1, 1}));
  for (int x = 0; x < 4; ++x) CHECK(t4(x, x, x) == x);
  CHECK_THROWS_AS(corresponding_tribracket(dihedral(4)), ContractError);
}

TEST_CASE("local operations") {
  auto d3 = dihedral_tribracket(3);
  CHECK(local_under(d3, {0, 1}, {0, 2}) == LocalPair{2, 1});
  CHECK(local_over(d3, {0, 2}, {0, 1}) == LocalPair{1, 1});
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      CHECK(local_under(d3, {x, y}, {x, y}) == LocalPair{y, x});
      CHECK(local_over(d3, {x, y}, {x, y}) == local_under(d3, {x, y}, {x, y}));
    }
  auto a5 = alexander_tribracket(5, {-2, 1});
  CHECK(local_under(a5, {1, 0}, {1, 3}) == LocalPair{3, 1});
  CHECK(local_over(a5, {1, 3}, {1, 0}) == LocalPair{0, 1});
  CHECK_THROWS_AS(local_under(d3, {0, 1}, {1, 1}), ContractError);
  CHECK_THROWS_AS(local_over(d3, {0, 1}, {2, 1}), ContractError);
}

TEST_CASE("slot inverses") {
  auto d3 = dihedral_tribracket(3);
  CHECK(d3.solve_third(0, 1, 0) == 1);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        CHECK(d3.solve_third(x, y, d3(x, y, z)) == z);
        CHECK(d3.solve_second(x, d3(x, y, z), z) == y);
        CHECK(d3.solve_first(d3(x, y, z), y, z) == x);
        CHECK(d3.solve_third(x, y, z) == ((-x + y + z) % 3 + 3) % 3);
      }
}

TEST_CASE("local operations are fiberwise bijections with exchange laws") {
  for (auto t : {dihedral_tribracket(5), alexander_tribracket(5, {-2, 1}),
                 corresponding_tribracket(alexander(2, {1, 1, 1})), dihedral_tribracket(7)}) {
    const int k = t.size();
    for (int x = 0; x < k; ++x) {
      for (int z = 0; z < k; ++z) {
        std::vector<int> under_hit(k, 0), over_hit(k, 0);
        for (int y = 0; y < k; ++y) {
          ++under_hit[local_under(t, {x, y}, {x, z}).fiber];
          ++over_hit[local_over(t, {x, y}, {x, z}).fiber];
        }
        for (int v = 0; v < k; ++v) {
          CHECK(under_hit[v] == 1);
          CHECK(over_hit[v] == 1);
        }
      }
      // Exchange laws inside one fiber, shaped like the biquandle ones: the
      // base moves, so pairs are re-based on the fly.
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
          for (int c = 0; c < k; ++c) {
            LocalPair pa{x, a}, pb{x, b}, pc{x, c};
            LocalPair ab = local_under(t, pa, pb), cb = local_under(t, pc, pb);
            LocalPair ac = local_under(t, pa, pc), bc = local_over(t, pb, pc);
            CHECK(local_under(t, ab, cb) == local_under(t, ac, bc));
          }
    }
  }
}
