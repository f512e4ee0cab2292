#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "tknots/chains.hpp"

namespace tknots {

/// Each crossing lists four edge labels counterclockwise, starting at the
/// incoming under-edge. Labels are consecutive along each component.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
};

/// Roles at one crossing. r is the region both strand normals point away
/// from; ry lies across u1, rz across o1 and rw is opposite r.
struct Crossing {
  int sign = 1;
  int u1 = 0, o1 = 0, u2 = 0, o2 = 0;
  int r = 0, ry = 0, rz = 0, rw = 0;
};

struct DiagramStructure {
  int semi_arcs = 0;
  int regions = 0;
  std::vector<int> labels;                 // semi-arc -> PD edge label
  std::vector<std::pair<int, int>> sides;  // semi-arc -> (right region, left region)
  std::vector<Crossing> crossings;
};

/// Faces by corner traversal, orientation and signs by strand propagation.
/// Rejects empty, malformed, disconnected and non-planar data.
DiagramStructure build_structure(const PDCode& pd);

/// Combinatorial surface-link diagram. Double curves are (u1,u2,o1,o2) in
/// semi-sheets, adjacency (s,r1,r2) says the normal of s points from r1 to r2,
/// and triple points are (sign, r1, b1, m1, t1).
struct SurfaceCode {
  int sheets = 0;
  int regions = 0;
  std::vector<std::array<int, 4>> double_curves;
  std::vector<std::array<int, 3>> adjacency;
  std::vector<std::array<int, 5>> triple_points;

  /// Range, arity and coverage checks; throws InputError.
  void validate() const;
  /// (r1, r2) for every sheet, from its adjacency record.
  std::vector<std::pair<int, int>> sheet_sides() const;
};

/// Two triple points of opposite sign, each a local model of three coordinate
/// planes, glued along one region.
SurfaceCode synthetic_two_triple_points();
/// One sheet separating two regions, no double curves.
SurfaceCode sphere_code();

using Diagram = std::variant<PDCode, SurfaceCode>;

/// Semi-arc (or semi-sheet) colors in B and region colors in X.
struct SBColoring {
  std::vector<int> arcs;
  std::vector<int> regions;
  auto operator<=>(const SBColoring&) const = default;
};

/// Pairs on semi-arcs (or semi-sheets); region colors are kept alongside.
struct LBColoring {
  std::vector<LocalPair> arcs;
  std::vector<int> regions;
  auto operator<=>(const LBColoring&) const = default;
};

std::vector<SBColoring> enumerate_sb_colorings(const DiagramStructure& ds, const ShadowBiquandle& sb,
                                               int jobs = 1);
std::vector<LBColoring> enumerate_lb_colorings(const DiagramStructure& ds, const HorizontalTribracket& t,
                                               int jobs = 1);
std::vector<SBColoring> enumerate_sb_colorings(const SurfaceCode& sc, const ShadowBiquandle& sb,
                                               int jobs = 1);
std::vector<LBColoring> enumerate_lb_colorings(const SurfaceCode& sc, const HorizontalTribracket& t,
                                               int jobs = 1);

bool is_valid(const DiagramStructure& ds, const ShadowBiquandle& sb, const SBColoring& c);
bool is_valid(const DiagramStructure& ds, const HorizontalTribracket& t, const LBColoring& c);
bool is_valid(const SurfaceCode& sc, const ShadowBiquandle& sb, const SBColoring& c);
bool is_valid(const SurfaceCode& sc, const HorizontalTribracket& t, const LBColoring& c);

/// Reads each pair off the two adjacent region colors.
LBColoring T(const ShadowBiquandle& sb, const std::vector<std::pair<int, int>>& sides, const SBColoring& c);
/// Region colors from the pairs, semi-arc colors x\y.
SBColoring T_inv(const ShadowBiquandle& sb, const std::vector<std::pair<int, int>>& sides,
                 const LBColoring& c);

/// Signed sum of local chains over crossings (degree 2) or triple points
/// (degree 3), projected to the nondegenerate quotient.
FormalChain chain_W(const DiagramStructure& ds, const SBColoring& c, const ChainTheory& sb_theory);
FormalChain chain_W(const DiagramStructure& ds, const LBColoring& c, const ChainTheory& lb_theory);
FormalChain chain_W(const SurfaceCode& sc, const SBColoring& c, const ChainTheory& sb_theory);
FormalChain chain_W(const SurfaceCode& sc, const LBColoring& c, const ChainTheory& lb_theory);

struct InvariantResult {
  int64_t coloring_count = 0;
  int64_t modulus = 0;                                // 0 when no cocycle was given
  std::map<int64_t, int64_t> phi;                     // value -> multiplicity
  std::optional<HomologyGroup> presentation;          // set when classes were computed
  std::map<std::vector<int64_t>, int64_t> classes;    // coordinates -> multiplicity
};

/// Phi from theta (rejected with kNotCocycle unless it is a cocycle of the
/// right degree) and, if requested, the multiset of class coordinates.
InvariantResult invariants(const std::vector<FormalChain>& chains, int degree, const ChainTheory& theory,
                           const CochainTable* theta, bool with_classes);

/// Phi with every value multiplied by k (used for rescaled cocycles).
std::map<int64_t, int64_t> scale_phi(const std::map<int64_t, int64_t>& phi, int64_t k, int64_t m);

}  // namespace tknots
