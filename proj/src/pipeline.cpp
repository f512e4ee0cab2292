#include "tknots/pipeline.hpp"

#include <algorithm>

namespace tknots {

int diagram_degree(const Diagram& d) { return std::holds_alternative<PDCode>(d) ? 2 : 3; }

ColoringRun run_colorings(const Diagram& d, const ShadowBiquandle& sb, const ChainTheory& theory, int jobs) {
  ColoringRun run;
  run.theory = theory.theory();
  if (run.theory == Theory::N) throw InputError("colorings are defined for the sb and lb theories only");
  auto go = [&](const auto& diagram) {
    if (run.theory == Theory::SB) {
      run.sb = enumerate_sb_colorings(diagram, sb, jobs);
      for (const auto& c : run.sb) run.chains.push_back(chain_W(diagram, c, theory));
    } else {
      run.lb = enumerate_lb_colorings(diagram, *theory.tribracket(), jobs);
      for (const auto& c : run.lb) run.chains.push_back(chain_W(diagram, c, theory));
    }
  };
  if (const auto* pd = std::get_if<PDCode>(&d))
    go(build_structure(*pd));
  else
    go(std::get<SurfaceCode>(d));
  return run;
}

bool Comparison::passed() const {
  return count_equal && t_bijective && w_mu_equal && w_closed.value_or(true) && phi_equal.value_or(true);
}

Comparison compare_pipelines(const Diagram& d, const ShadowBiquandle& sb, const std::optional<CochainTable>& theta,
                             int jobs) {
  if (!sb.strongly_connected())
    throw InputError("comparison needs a strongly connected shadow biquandle", ErrorCode::kContract);
  const int degree = diagram_degree(d);
  const auto sbt = ChainTheory::shadow(sb, degree + 1, jobs);
  const auto lbt = ChainTheory::local(corresponding_tribracket(sb), degree + 1, jobs);
  const ColoringRun s = run_colorings(d, sb, sbt, jobs);
  const ColoringRun l = run_colorings(d, sb, lbt, jobs);

  std::vector<std::pair<int, int>> sides;
  if (const auto* pd = std::get_if<PDCode>(&d))
    sides = build_structure(*pd).sides;
  else
    sides = std::get<SurfaceCode>(d).sheet_sides();

  Comparison out;
  out.count_equal = s.size() == l.size();

  // T maps every SB coloring onto a distinct LB coloring and T_inv undoes it.
  std::vector<LBColoring> image;
  bool round_trip = true;
  for (const auto& c : s.sb) {
    image.push_back(T(sb, sides, c));
    round_trip = round_trip && T_inv(sb, sides, image.back()) == c;
  }
  std::vector<LBColoring> found = l.lb;
  std::sort(image.begin(), image.end());
  std::sort(found.begin(), found.end());
  out.t_bijective = round_trip && image == found;

  // W^LB(T(C)) = mu(W^SB(C)), matched coloring by coloring
  out.w_mu_equal = out.t_bijective;
  if (out.t_bijective) {
    std::map<LBColoring, size_t> where;
    for (size_t i = 0; i < l.lb.size(); ++i) where[l.lb[i]] = i;
    for (size_t i = 0; i < s.size() && out.w_mu_equal; ++i)
      out.w_mu_equal = mu(sbt, lbt, s.chains[i]) == l.chains[where.at(T(sb, sides, s.sb[i]))];
  }

  if (degree == 2) {
    bool closed = true;
    for (const auto& w : s.chains) closed = closed && sbt.boundary(w).is_zero();
    for (const auto& w : l.chains) closed = closed && lbt.boundary(w).is_zero();
    out.w_closed = closed;
  }

  const CochainTable* th = theta ? &*theta : nullptr;
  std::optional<CochainTable> moved;
  if (th) moved = transport_mu(*th, sb);
  out.sb = invariants(s.chains, degree, sbt, th, false);
  out.lb = invariants(l.chains, degree, lbt, moved ? &*moved : nullptr, false);
  if (th) out.phi_equal = out.sb.phi == out.lb.phi;
  return out;
}

}  // namespace tknots
