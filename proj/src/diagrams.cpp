#include "tknots/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "search.hpp"
#include "tknots/checked.hpp"

namespace tknots {

using detail::Assigner;
using detail::Search;

// ---------------------------------------------------------------- PD structure

namespace {

struct Dart {
  int c, p;
  bool operator==(const Dart&) const = default;
};

}  // namespace

DiagramStructure build_structure(const PDCode& pd) {
  const int nc = static_cast<int>(pd.crossings.size());
  if (nc == 0) throw InputError("PD code has no crossings; use a kinked unknot instead of the round one");

  std::map<int, std::vector<Dart>> darts;
  for (int c = 0; c < nc; ++c)
    for (int p = 0; p < 4; ++p) darts[pd.crossings[c][p]].push_back({c, p});
  for (const auto& [label, ds] : darts)
    if (ds.size() != 2)
      throw InputError("PD edge " + std::to_string(label) + " appears " + std::to_string(ds.size()) +
                       " times (expected 2)");

  auto slot = [](Dart d) { return d.c * 4 + d.p; };
  auto partner = [&](Dart d) {
    const auto& ds = darts.at(pd.crossings[d.c][d.p]);
    return ds[0] == d ? ds[1] : ds[0];
  };

  // head[d] = 1 when the strand enters the crossing at d.
  std::vector<int> head(4 * nc, -1);
  auto propagate = [&](std::vector<Dart> stack) {
    while (!stack.empty()) {
      const Dart d = stack.back();
      stack.pop_back();
      const int h = head[slot(d)];
      for (Dart n : {partner(d), Dart{d.c, (d.p + 2) % 4}}) {
        const int want = 1 - h;
        if (head[slot(n)] < 0) {
          head[slot(n)] = want;
          stack.push_back(n);
        } else if (head[slot(n)] != want) {
          throw InputError("PD code has inconsistent strand orientations");
        }
      }
    }
  };
  std::vector<Dart> seeds;
  for (int c = 0; c < nc; ++c) {
    if (head[slot({c, 0})] == 0) throw InputError("PD code has inconsistent strand orientations");
    head[slot({c, 0})] = 1;
    head[slot({c, 2})] = 0;
    seeds.push_back({c, 0});
    seeds.push_back({c, 2});
  }
  propagate(seeds);
  // Components that never pass under: orient by label succession.
  for (int c = 0; c < nc; ++c) {
    if (head[slot({c, 1})] >= 0) continue;
    const int j = pd.crossings[c][1], l = pd.crossings[c][3];
    const bool j_in = std::abs(j - l) == 1 ? j < l : j > l;
    head[slot({c, 1})] = j_in ? 1 : 0;
    head[slot({c, 3})] = j_in ? 0 : 1;
    propagate({{c, 1}, {c, 3}});
  }

  // Faces: orbits of d -> (partner(d).c, partner(d).p - 1). The face of dart
  // (c,p) is the corner between positions p and p+1.
  std::vector<int> face(4 * nc, -1);
  int nf = 0;
  for (int c = 0; c < nc; ++c)
    for (int p = 0; p < 4; ++p) {
      Dart d{c, p};
      if (face[slot(d)] >= 0) continue;
      while (face[slot(d)] < 0) {
        face[slot(d)] = nf;
        const Dart o = partner(d);
        d = {o.c, (o.p + 3) % 4};
      }
      ++nf;
    }

  // Connectivity of the 4-valent graph.
  std::vector<int> comp(nc);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (const auto& [label, ds] : darts) comp[find(ds[0].c)] = find(ds[1].c);
  for (int c = 0; c < nc; ++c)
    if (find(c) != find(0)) throw InputError("PD code describes a disconnected diagram");

  const int ne = static_cast<int>(darts.size());
  if (nc - ne + nf != 2)
    throw InputError("PD code fails the planarity check V - E + F = 2 (" + std::to_string(nc) + " - " +
                     std::to_string(ne) + " + " + std::to_string(nf) + ")");

  DiagramStructure ds;
  ds.semi_arcs = ne;
  ds.regions = nf;
  std::map<int, int> index;
  for (const auto& [label, d] : darts) {
    index[label] = static_cast<int>(ds.labels.size());
    ds.labels.push_back(label);
    const Dart h = head[slot(d[0])] == 1 ? d[0] : d[1];
    const Dart t = head[slot(d[0])] == 1 ? d[1] : d[0];
    ds.sides.emplace_back(face[slot(h)], face[slot(t)]);
  }

  for (int c = 0; c < nc; ++c) {
    const auto& xs = pd.crossings[c];
    const bool positive = head[slot({c, 3})] == 1;
    const int pu1 = positive ? 0 : 2, po1 = 1, pu2 = positive ? 2 : 0, po2 = 3;
    auto corner = [&](int p, int q) { return (p + 1) % 4 == q ? face[slot({c, p})] : face[slot({c, q})]; };
    Crossing k;
    k.sign = positive ? 1 : -1;
    k.u1 = index[xs[pu1]];
    k.o1 = index[xs[po1]];
    k.u2 = index[xs[pu2]];
    k.o2 = index[xs[po2]];
    k.r = corner(pu1, po1);
    k.ry = corner(pu1, po2);
    k.rz = corner(po1, pu2);
    k.rw = corner(pu2, po2);
    if (ds.sides[k.u1].first != k.r || ds.sides[k.o1].first != k.r)
      throw InputError("PD code is not consistent with a planar diagram at crossing " + std::to_string(c));
    ds.crossings.push_back(k);
  }
  return ds;
}

// ---------------------------------------------------------------- surface codes

void SurfaceCode::validate() const {
  if (sheets < 1 || regions < 1) throw InputError("surface code needs at least one sheet and one region");
  auto sheet = [&](int s, const char* what) {
    if (s < 0 || s >= sheets) throw InputError(std::string("surface code: ") + what + " sheet out of range");
  };
  auto region = [&](int r, const char* what) {
    if (r < 0 || r >= regions) throw InputError(std::string("surface code: ") + what + " region out of range");
  };
  for (const auto& d : double_curves)
    for (int s : d) sheet(s, "double curve");
  std::vector<std::optional<std::pair<int, int>>> side(sheets);
  for (const auto& [s, r1, r2] : adjacency) {
    sheet(s, "adjacency");
    region(r1, "adjacency");
    region(r2, "adjacency");
    if (side[s] && *side[s] != std::pair{r1, r2})
      throw InputError("surface code: sheet " + std::to_string(s) + " has conflicting adjacency records");
    side[s] = std::pair{r1, r2};
  }
  for (int s = 0; s < sheets; ++s)
    if (!side[s]) throw InputError("surface code: sheet " + std::to_string(s) + " has no adjacency record");
  for (const auto& [sign, r1, b1, m1, t1] : triple_points) {
    if (sign != 1 && sign != -1) throw InputError("surface code: triple point sign must be +1 or -1");
    region(r1, "triple point");
    for (int s : {b1, m1, t1}) {
      sheet(s, "triple point");
      if (side[s]->first != r1)
        throw InputError("surface code: triple point sheet " + std::to_string(s) +
                         " does not have the source region on its negative side");
    }
  }
}

std::vector<std::pair<int, int>> SurfaceCode::sheet_sides() const {
  std::vector<std::pair<int, int>> out(sheets, {-1, -1});
  for (const auto& [s, r1, r2] : adjacency) out[s] = {r1, r2};
  return out;
}

SurfaceCode synthetic_two_triple_points() {
  // One triple point: planes X=0 (bottom), Y=0 (middle), Z=0 (top) cut space
  // into octants (id sx + 2sy + 4sz) and themselves into twelve quarter sheets.
  SurfaceCode sc;
  sc.sheets = 24;
  sc.regions = 15;
  for (int model = 0; model < 2; ++model) {
    const int s0 = 12 * model;
    // Octant 000 of the second model is octant 111 of the first.
    auto oct = [&](int sx, int sy, int sz) {
      const int id = sx + 2 * sy + 4 * sz;
      if (model == 0) return id;
      return id == 0 ? 7 : 7 + id;
    };
    auto B = [&](int sy, int sz) { return s0 + sy + 2 * sz; };
    auto M = [&](int sx, int sz) { return s0 + 4 + sx + 2 * sz; };
    auto T = [&](int sx, int sy) { return s0 + 8 + sx + 2 * sy; };
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        sc.adjacency.push_back({B(a, b), oct(0, a, b), oct(1, a, b)});
        sc.adjacency.push_back({M(a, b), oct(a, 0, b), oct(a, 1, b)});
        sc.adjacency.push_back({T(a, b), oct(a, b, 0), oct(a, b, 1)});
      }
    for (int s = 0; s < 2; ++s) {
      sc.double_curves.push_back({B(0, s), B(1, s), M(0, s), M(1, s)});  // bottom under middle
      sc.double_curves.push_back({B(s, 0), B(s, 1), T(0, s), T(1, s)});  // bottom under top
      sc.double_curves.push_back({M(s, 0), M(s, 1), T(s, 0), T(s, 1)});  // middle under top
    }
    sc.triple_points.push_back({model == 0 ? 1 : -1, oct(0, 0, 0), B(0, 0), M(0, 0), T(0, 0)});
  }
  std::sort(sc.adjacency.begin(), sc.adjacency.end());
  sc.validate();
  return sc;
}

SurfaceCode sphere_code() {
  SurfaceCode sc;
  sc.sheets = 1;
  sc.regions = 2;
  sc.adjacency = {{0, 0, 1}};
  return sc;
}

// ---------------------------------------------------------------- rules

namespace {

// (u1,o1) -> (u2,o2) = (u1 under o1, o1 over u1), inverted through S.
void add_crossing_rule(Search& s, const FiniteBiquandle& bq, int u1, int o1, int u2, int o2) {
  s.add({u1, o1, u2, o2}, [&bq, u1, o1, u2, o2](Assigner& a) {
    if (a.known(u1) && a.known(o1)) {
      if (!a.set(u2, bq.under(a[u1], a[o1])) || !a.set(o2, bq.over(a[o1], a[u1]))) return false;
    }
    if (a.known(u2) && a.known(o2)) {
      const auto [x, y] = bq.solve_S(a[o2], a[u2]);
      if (!a.set(u1, x) || !a.set(o1, y)) return false;
    }
    return true;
  });
}

// C(from) * C(s) = C(to)
void add_adjacency_rule(Search& s, const ShadowBiquandle& sb, int sheet, int from, int to) {
  s.add({sheet, from, to}, [&sb, sheet, from, to](Assigner& a) {
    if (a.known(sheet) && a.known(from) && !a.set(to, sb.act(a[from], a[sheet]))) return false;
    if (a.known(sheet) && a.known(to) && !a.set(from, sb.act_inv(a[to], a[sheet]))) return false;
    if (sb.strongly_connected() && a.known(from) && a.known(to) && !a.set(sheet, sb.searrow(a[from], a[to])))
      return false;
    return true;
  });
}

// C(w) = [C(x), C(y), C(z)]
void add_bracket_rule(Search& s, const HorizontalTribracket& t, int x, int y, int z, int w) {
  s.add({x, y, z, w}, [&t, x, y, z, w](Assigner& a) {
    const int known = a.known(x) + a.known(y) + a.known(z) + a.known(w);
    if (known < 3) return true;
    if (a.known(x) && a.known(y) && a.known(z)) return a.set(w, t(a[x], a[y], a[z]));
    if (!a.known(x)) return a.set(x, t.solve_first(a[w], a[y], a[z]));
    if (!a.known(y)) return a.set(y, t.solve_second(a[x], a[w], a[z]));
    return a.set(z, t.solve_third(a[x], a[y], a[w]));
  });
}

void add_equal_rule(Search& s, int p, int q) {
  if (p == q) return;
  s.add({p, q}, [p, q](Assigner& a) {
    if (a.known(p)) return a.set(q, a[p]);
    if (a.known(q)) return a.set(p, a[q]);
    return true;
  });
}

std::vector<SBColoring> split_sb(const std::vector<std::vector<int>>& sols, int arcs) {
  std::vector<SBColoring> out;
  out.reserve(sols.size());
  for (const auto& v : sols) out.push_back({{v.begin(), v.begin() + arcs}, {v.begin() + arcs, v.end()}});
  return out;
}

std::vector<LBColoring> pairs_from_regions(const std::vector<std::vector<int>>& sols,
                                           const std::vector<std::pair<int, int>>& sides) {
  std::vector<LBColoring> out;
  out.reserve(sols.size());
  for (const auto& regions : sols) {
    LBColoring c;
    c.regions = regions;
    for (auto [r, l] : sides) c.arcs.push_back({regions[r], regions[l]});
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> domains(int n1, int d1, int n2, int d2) {
  std::vector<int> d(n1, d1);
  d.insert(d.end(), n2, d2);
  return d;
}

}  // namespace

// ---------------------------------------------------------------- enumeration

std::vector<SBColoring> enumerate_sb_colorings(const DiagramStructure& ds, const ShadowBiquandle& sb, int jobs) {
  const int E = ds.semi_arcs;
  Search s(domains(E, sb.biquandle_size(), ds.regions, sb.bset_size()));
  for (const auto& k : ds.crossings) add_crossing_rule(s, sb.biquandle(), k.u1, k.o1, k.u2, k.o2);
  for (int a = 0; a < E; ++a) add_adjacency_rule(s, sb, a, E + ds.sides[a].first, E + ds.sides[a].second);
  return split_sb(s.solve(jobs), E);
}

std::vector<LBColoring> enumerate_lb_colorings(const DiagramStructure& ds, const HorizontalTribracket& t, int jobs) {
  Search s(std::vector<int>(ds.regions, t.size()));
  for (const auto& k : ds.crossings) add_bracket_rule(s, t, k.r, k.ry, k.rz, k.rw);
  auto out = pairs_from_regions(s.solve(jobs), ds.sides);
  for (const auto& c : out)
    if (!is_valid(ds, t, c)) throw InternalError("region enumeration produced an invalid LB coloring");
  return out;
}

std::vector<SBColoring> enumerate_sb_colorings(const SurfaceCode& sc, const ShadowBiquandle& sb, int jobs) {
  sc.validate();
  const int S = sc.sheets;
  Search s(domains(S, sb.biquandle_size(), sc.regions, sb.bset_size()));
  for (const auto& [u1, u2, o1, o2] : sc.double_curves) add_crossing_rule(s, sb.biquandle(), u1, o1, u2, o2);
  for (const auto& [sh, r1, r2] : sc.adjacency) add_adjacency_rule(s, sb, sh, S + r1, S + r2);
  return split_sb(s.solve(jobs), S);
}

std::vector<LBColoring> enumerate_lb_colorings(const SurfaceCode& sc, const HorizontalTribracket& t, int jobs) {
  sc.validate();
  const auto sides = sc.sheet_sides();
  Search s(std::vector<int>(sc.regions, t.size()));
  for (const auto& [u1, u2, o1, o2] : sc.double_curves) {
    // u1 = (x,y), o1 = (x,z), u2 = (z,[x,y,z]), o2 = (y,[x,y,z])
    add_equal_rule(s, sides[u1].first, sides[o1].first);
    add_equal_rule(s, sides[u2].first, sides[o1].second);
    add_equal_rule(s, sides[o2].first, sides[u1].second);
    add_bracket_rule(s, t, sides[u1].first, sides[u1].second, sides[o1].second, sides[u2].second);
    add_equal_rule(s, sides[o2].second, sides[u2].second);
  }
  auto out = pairs_from_regions(s.solve(jobs), sides);
  for (const auto& c : out)
    if (!is_valid(sc, t, c)) throw InternalError("region enumeration produced an invalid LB coloring");
  return out;
}

// ---------------------------------------------------------------- validity

namespace {

bool sb_relations(const FiniteBiquandle& bq, const std::vector<int>& arcs, int u1, int o1, int u2, int o2) {
  return arcs[u2] == bq.under(arcs[u1], arcs[o1]) && arcs[o2] == bq.over(arcs[o1], arcs[u1]);
}

bool lb_relations(const HorizontalTribracket& t, const std::vector<LocalPair>& arcs, int u1, int o1, int u2,
                  int o2) {
  if (arcs[u1].base != arcs[o1].base) return false;
  return arcs[u2] == local_under(t, arcs[u1], arcs[o1]) && arcs[o2] == local_over(t, arcs[o1], arcs[u1]);
}

bool pairs_match_regions(const std::vector<std::pair<int, int>>& sides, const LBColoring& c, int regions) {
  if (static_cast<int>(c.regions.size()) != regions || c.arcs.size() != sides.size()) return false;
  for (size_t s = 0; s < sides.size(); ++s)
    if (c.arcs[s] != LocalPair{c.regions[sides[s].first], c.regions[sides[s].second]}) return false;
  return true;
}

bool sizes_ok(const SBColoring& c, int arcs, int regions) {
  return static_cast<int>(c.arcs.size()) == arcs && static_cast<int>(c.regions.size()) == regions;
}

}  // namespace

bool is_valid(const DiagramStructure& ds, const ShadowBiquandle& sb, const SBColoring& c) {
  if (!sizes_ok(c, ds.semi_arcs, ds.regions)) return false;
  for (const auto& k : ds.crossings)
    if (!sb_relations(sb.biquandle(), c.arcs, k.u1, k.o1, k.u2, k.o2)) return false;
  for (int s = 0; s < ds.semi_arcs; ++s)
    if (sb.act(c.regions[ds.sides[s].first], c.arcs[s]) != c.regions[ds.sides[s].second]) return false;
  return true;
}

bool is_valid(const DiagramStructure& ds, const HorizontalTribracket& t, const LBColoring& c) {
  if (!pairs_match_regions(ds.sides, c, ds.regions)) return false;
  for (const auto& k : ds.crossings)
    if (!lb_relations(t, c.arcs, k.u1, k.o1, k.u2, k.o2)) return false;
  return true;
}

bool is_valid(const SurfaceCode& sc, const ShadowBiquandle& sb, const SBColoring& c) {
  if (!sizes_ok(c, sc.sheets, sc.regions)) return false;
  for (const auto& [u1, u2, o1, o2] : sc.double_curves)
    if (!sb_relations(sb.biquandle(), c.arcs, u1, o1, u2, o2)) return false;
  for (const auto& [s, r1, r2] : sc.adjacency)
    if (sb.act(c.regions[r1], c.arcs[s]) != c.regions[r2]) return false;
  return true;
}

bool is_valid(const SurfaceCode& sc, const HorizontalTribracket& t, const LBColoring& c) {
  if (!pairs_match_regions(sc.sheet_sides(), c, sc.regions)) return false;
  for (const auto& [u1, u2, o1, o2] : sc.double_curves)
    if (!lb_relations(t, c.arcs, u1, o1, u2, o2)) return false;
  return true;
}

// ---------------------------------------------------------------- T

LBColoring T(const ShadowBiquandle& sb, const std::vector<std::pair<int, int>>& sides, const SBColoring& c) {
  if (!sb.strongly_connected()) throw ContractError("T needs a strongly connected shadow biquandle");
  if (c.arcs.size() != sides.size()) throw ContractError("T: coloring does not fit the diagram");
  LBColoring out;
  out.regions = c.regions;
  for (size_t s = 0; s < sides.size(); ++s) {
    const int x = c.regions.at(sides[s].first), y = c.regions.at(sides[s].second);
    if (sb.act(x, c.arcs[s]) != y) throw ContractError("T: input is not a valid SB coloring");
    out.arcs.push_back({x, y});
  }
  return out;
}

SBColoring T_inv(const ShadowBiquandle& sb, const std::vector<std::pair<int, int>>& sides, const LBColoring& c) {
  if (!sb.strongly_connected()) throw ContractError("T_inv needs a strongly connected shadow biquandle");
  if (c.arcs.size() != sides.size()) throw ContractError("T_inv: coloring does not fit the diagram");
  SBColoring out;
  out.regions = c.regions;
  std::vector<int> seen(out.regions.size(), 0);
  auto put = [&](int region, int value) {
    if (region < 0 || region >= static_cast<int>(out.regions.size()))
      throw ContractError("T_inv: region colors missing");
    if (seen[region] && out.regions[region] != value)
      throw ContractError("T_inv: pairs disagree on a region color");
    out.regions[region] = value;
    seen[region] = 1;
  };
  for (size_t s = 0; s < sides.size(); ++s) {
    put(sides[s].first, c.arcs[s].base);
    put(sides[s].second, c.arcs[s].fiber);
    out.arcs.push_back(sb.searrow(c.arcs[s].base, c.arcs[s].fiber));
  }
  return out;
}

// ---------------------------------------------------------------- W

namespace {

void require(const ChainTheory& th, Theory t, int degree) {
  if (th.theory() != t) throw ContractError("chain_W: theory does not match the coloring type");
  if (th.cap() < degree) throw ContractError("chain_W: chain theory cap below the diagram degree");
}

FormalChain lb_local(const ChainTheory& th, const std::vector<LocalPair>& pairs, int sign) {
  Generator g{pairs[0].base, {}};
  for (const auto& p : pairs) {
    if (p.base != g.base) throw ContractError("chain_W: local pairs at one crossing have different bases");
    g.word.push_back(p.fiber);
  }
  return th.chain_of(g, sign);
}

}  // namespace

FormalChain chain_W(const DiagramStructure& ds, const SBColoring& c, const ChainTheory& th) {
  require(th, Theory::SB, 2);
  FormalChain w;
  w.degree = 2;
  for (const auto& k : ds.crossings) w += th.chain_of({c.regions[k.r], {c.arcs[k.u1], c.arcs[k.o1]}}, k.sign);
  return w;
}

FormalChain chain_W(const DiagramStructure& ds, const LBColoring& c, const ChainTheory& th) {
  require(th, Theory::LB, 2);
  FormalChain w;
  w.degree = 2;
  for (const auto& k : ds.crossings) w += lb_local(th, {c.arcs[k.u1], c.arcs[k.o1]}, k.sign);
  return w;
}

FormalChain chain_W(const SurfaceCode& sc, const SBColoring& c, const ChainTheory& th) {
  require(th, Theory::SB, 3);
  FormalChain w;
  w.degree = 3;
  for (const auto& [sign, r1, b1, m1, t1] : sc.triple_points)
    w += th.chain_of({c.regions[r1], {c.arcs[b1], c.arcs[m1], c.arcs[t1]}}, sign);
  return w;
}

FormalChain chain_W(const SurfaceCode& sc, const LBColoring& c, const ChainTheory& th) {
  require(th, Theory::LB, 3);
  FormalChain w;
  w.degree = 3;
  for (const auto& [sign, r1, b1, m1, t1] : sc.triple_points)
    w += lb_local(th, {c.arcs[b1], c.arcs[m1], c.arcs[t1]}, sign);
  return w;
}

// ---------------------------------------------------------------- invariants

InvariantResult invariants(const std::vector<FormalChain>& chains, int degree, const ChainTheory& theory,
                           const CochainTable* theta, bool with_classes) {
  InvariantResult res;
  res.coloring_count = static_cast<int64_t>(chains.size());
  if (theta) {
    if (theta->theory != theory.theory() || theta->degree != degree)
      throw Error(ErrorCode::kNotCocycle, "cocycle has the wrong theory or degree for this diagram");
    if (theta->base_size != theory.base_size() || theta->letter_size != theory.letter_size())
      throw InputError("cocycle table does not fit the structure", ErrorCode::kSizeMismatch);
    if (!is_cocycle(theory, *theta)) throw Error(ErrorCode::kNotCocycle, "the supplied cochain is not a cocycle");
    res.modulus = theta->modulus;
    for (const auto& w : chains) ++res.phi[theta->evaluate(theory, w)];
  }
  if (with_classes) {
    const HomologyCoordinates hc(theory, degree);
    res.presentation = HomologyGroup{degree, 0, hc.free_rank(), hc.torsion()};
    for (const auto& w : chains) ++res.classes[hc.coordinates(w)];
  }
  return res;
}

std::map<int64_t, int64_t> scale_phi(const std::map<int64_t, int64_t>& phi, int64_t k, int64_t m) {
  std::map<int64_t, int64_t> out;
  for (auto [v, mult] : phi) out[checked::mod(checked::mul(v, k), m)] += mult;
  return out;
}

}  // namespace tknots
