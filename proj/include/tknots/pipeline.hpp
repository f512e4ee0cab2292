#pragma once

#include <optional>
#include <variant>

#include "tknots/cocycles.hpp"
#include "tknots/diagrams.hpp"

namespace tknots {


/// 2 for link diagrams, 3 for surface codes.
int diagram_degree(const Diagram& d);

/// SB or LB colorings plus their W chains, in enumeration order.
struct ColoringRun {
  Theory theory = Theory::SB;
  std::vector<SBColoring> sb;
  std::vector<LBColoring> lb;
  std::vector<FormalChain> chains;
  size_t size() const { return chains.size(); }
};

/// LB runs enumerate region colorings independently through the corresponding
/// tribracket of sb; they never go through the SB colorings.
ColoringRun run_colorings(const Diagram& d, const ShadowBiquandle& sb, const ChainTheory& theory, int jobs = 1);

/// Both pipelines on one diagram, with the LB cocycle taken as theta o eta.
struct Comparison {
  InvariantResult sb, lb;
  bool count_equal = false;
  bool t_bijective = false;
  bool w_mu_equal = false;
  std::optional<bool> w_closed;   // dW = 0 on both sides; link diagrams only
  std::optional<bool> phi_equal;  // when a cocycle was given
  bool passed() const;
};

Comparison compare_pipelines(const Diagram& d, const ShadowBiquandle& sb, const std::optional<CochainTable>& theta,
                             int jobs = 1);

}  // namespace tknots
