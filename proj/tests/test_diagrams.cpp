#include <doctest.h>

#include <set>

#include "tknots/cocycles.hpp"
#include "tknots/diagrams.hpp"

using namespace tknots;

namespace {

const PDCode kTrefoil{{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 3}}};
const PDCode kFigureEight{{{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}}};
const PDCode kKink{{{1, 4, 2, 5}, {3, 8, 4, 1}, {5, 2, 6, 3}, {6, 7, 7, 8}}};
const PDCode kTrefoilR2{{{3, 8, 4, 9}, {7, 10, 8, 1}, {9, 4, 10, 5}, {6, 2, 7, 1}, {5, 2, 6, 3}}};

struct Expect {
  const PDCode* pd;
  int n;
  int semi_arcs, regions;
  int64_t count;
  std::map<int64_t, int64_t> phi;
};

std::map<int64_t, int64_t> phi_of(const DiagramStructure& ds, const ShadowBiquandle& sb, const CochainTable& th) {
  const auto theory = ChainTheory::shadow(sb, 3);
  std::vector<FormalChain> ws;
  for (const auto& c : enumerate_sb_colorings(ds, sb)) ws.push_back(chain_W(ds, c, theory));
  return invariants(ws, 2, theory, &th, false).phi;
}

}  // namespace

TEST_CASE("PD structures and SB invariants match the exhaustive oracle") {
  const std::vector<Expect> cases = {
      {&kTrefoil, 3, 6, 5, 27, {{0, 9}, {1, 18}}},
      {&kKink, 3, 8, 6, 27, {{0, 9}, {1, 18}}},
      {&kTrefoilR2, 3, 10, 7, 27, {{0, 9}, {1, 18}}},
      {&kFigureEight, 3, 8, 6, 9, {{0, 9}}},
      {&kFigureEight, 5, 8, 6, 125, {{0, 25}, {2, 50}, {3, 50}}},
  };
  for (const auto& e : cases) {
    const auto ds = build_structure(*e.pd);
    CHECK(ds.semi_arcs == e.semi_arcs);
    CHECK(ds.regions == e.regions);
    const auto sb = dihedral(e.n);
    const auto cols = enumerate_sb_colorings(ds, sb);
    CHECK(static_cast<int64_t>(cols.size()) == e.count);
    for (const auto& c : cols) CHECK(is_valid(ds, sb, c));
    CHECK(phi_of(ds, sb, mochizuki_2cocycle(e.n)) == e.phi);
  }
}

TEST_CASE("trefoil crossing signs agree") {
  const auto ds = build_structure(kTrefoil);
  std::set<int> signs;
  for (const auto& k : ds.crossings) signs.insert(k.sign);
  CHECK(signs.size() == 1);
  const auto f8 = build_structure(kFigureEight);
  int writhe = 0;
  for (const auto& k : f8.crossings) writhe += k.sign;
  CHECK(writhe == 0);
}

TEST_CASE("T is a bijection between SB and LB colorings") {
  for (const PDCode* pd : {&kTrefoil, &kFigureEight, &kKink}) {
    const auto ds = build_structure(*pd);
    const auto sb = dihedral(3);
    const auto t = corresponding_tribracket(sb);
    auto sbc = enumerate_sb_colorings(ds, sb);
    auto lbc = enumerate_lb_colorings(ds, t);
    REQUIRE(sbc.size() == lbc.size());
    std::vector<LBColoring> image;
    for (const auto& c : sbc) {
      const auto l = T(sb, ds.sides, c);
      CHECK(is_valid(ds, t, l));
      CHECK(T_inv(sb, ds.sides, l) == c);
      image.push_back(l);
    }
    std::sort(image.begin(), image.end());
    std::sort(lbc.begin(), lbc.end());
    CHECK(image == lbc);
  }
}

TEST_CASE("W is a cycle and mu carries W^SB to W^LB") {
  for (int n : {3, 5}) {
    const auto sb = dihedral(n);
    const auto sbt = ChainTheory::shadow(sb, 3);
    const auto lbt = ChainTheory::local(corresponding_tribracket(sb), 3);
    for (const PDCode* pd : {&kTrefoil, &kFigureEight, &kTrefoilR2}) {
      const auto ds = build_structure(*pd);
      for (const auto& c : enumerate_sb_colorings(ds, sb)) {
        const auto ws = chain_W(ds, c, sbt);
        const auto wl = chain_W(ds, T(sb, ds.sides, c), lbt);
        CHECK(sbt.boundary(ws).is_zero());
        CHECK(lbt.boundary(wl).is_zero());
        CHECK(mu(sbt, lbt, ws) == wl);
      }
    }
  }
}

TEST_CASE("LB invariant from the rescaled closed form equals 4 times the SB one") {
  const auto ds = build_structure(kFigureEight);
  const auto sb = dihedral(5);
  const auto lbt = ChainTheory::local(dihedral_tribracket(5), 3);
  std::vector<FormalChain> ws;
  for (const auto& c : enumerate_lb_colorings(ds, dihedral_tribracket(5))) ws.push_back(chain_W(ds, c, lbt));
  const auto lb2 = closed_form_LB(5, 2);
  CHECK(invariants(ws, 2, lbt, &lb2, false).phi == scale_phi(phi_of(ds, sb, mochizuki_2cocycle(5)), 4, 5));
}

TEST_CASE("homology classes of W") {
  const auto ds = build_structure(kTrefoil);
  const auto sb = dihedral(3);
  const auto sbt = ChainTheory::shadow(sb, 3);
  std::vector<FormalChain> ws;
  for (const auto& c : enumerate_sb_colorings(ds, sb)) ws.push_back(chain_W(ds, c, sbt));
  const auto res = invariants(ws, 2, sbt, nullptr, true);
  REQUIRE(res.presentation);
  CHECK(res.presentation->torsion == std::vector<int64_t>{3});
  int64_t total = 0;
  for (const auto& [coords, mult] : res.classes) total += mult;
  CHECK(total == 27);
  // theta detects the nontrivial classes, so they must be present
  CHECK(res.classes.size() >= 2);
}

TEST_CASE("non-cocycles are rejected") {
  const auto sb = dihedral(3);
  const auto sbt = ChainTheory::shadow(sb, 3);
  CochainTable bad = CochainTable::zero(Theory::SB, 2, 3, 3, 3);
  bad.values[bad.flat_index({0, 1, 2})] = 1;
  REQUIRE_FALSE(is_cocycle(sbt, bad));
  try {
    invariants({}, 2, sbt, &bad, false);
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotCocycle);
  }
}

TEST_CASE("malformed PD codes") {
  CHECK_THROWS_AS(build_structure(PDCode{}), InputError);
  CHECK_THROWS_AS(build_structure(PDCode{{{1, 2, 3, 4}}}), InputError);
  // two disjoint kinked circles
  CHECK_THROWS_AS(build_structure(PDCode{{{1, 2, 2, 1}, {3, 4, 4, 3}}}), InputError);
  CHECK_THROWS_AS(build_structure(PDCode{{{1, 4, 2, 5}, {3, 6, 4, 1}, {5, 2, 6, 7}}}), InputError);
}

TEST_CASE("surface codes") {
  const auto sb = dihedral(3);
  const auto t = corresponding_tribracket(sb);

  const auto sphere = sphere_code();
  CHECK(enumerate_sb_colorings(sphere, sb).size() == 9);
  CHECK(enumerate_lb_colorings(sphere, t).size() == 9);

  const auto sc = synthetic_two_triple_points();
  CHECK(sc.regions == 15);
  CHECK(sc.sheets == 24);
  const auto sbc = enumerate_sb_colorings(sc, sb);
  const auto lbc = enumerate_lb_colorings(sc, t);
  CHECK(sbc.size() == 2187);
  CHECK(lbc.size() == 2187);
  CHECK(enumerate_sb_colorings(sc, sb, 3) == sbc);

  const auto sbt = ChainTheory::shadow(sb, 3);
  const auto lbt = ChainTheory::local(t, 3);
  const auto sides = sc.sheet_sides();
  std::set<LBColoring> lbs(lbc.begin(), lbc.end());
  for (const auto& c : sbc) {
    CHECK(is_valid(sc, sb, c));
    const auto l = T(sb, sides, c);
    CHECK(lbs.count(l) == 1);
    CHECK(mu(sbt, lbt, chain_W(sc, c, sbt)) == chain_W(sc, l, lbt));
  }
}

TEST_CASE("surface code validation and empty colorings") {
  SurfaceCode sc;
  sc.sheets = 3;
  sc.regions = 2;
  sc.double_curves = {{0, 1, 2, 2}};
  sc.adjacency = {{0, 0, 1}, {1, 0, 1}, {2, 1, 0}};
  sc.validate();

  // x * a = x + 1 over the dihedral biquandle of order 3
  const auto d3 = dihedral(3);
  IntTable shift(3, std::vector<int>(3));
  for (int x = 0; x < 3; ++x)
    for (int a = 0; a < 3; ++a) shift[x][a] = (x + 1) % 3;
  const auto sb = build_strong_connectivity(ShadowBiquandle::create(d3.biquandle(), shift));
  CHECK(enumerate_sb_colorings(sc, sb).empty());

  auto bad = sc;
  bad.adjacency.push_back({0, 1, 0});
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = sc;
  bad.adjacency.pop_back();
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = sc;
  bad.double_curves[0][3] = 7;
  CHECK_THROWS_AS(bad.validate(), InputError);
}
