#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tknots {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

CheckResult check_axiom_battery();
CheckResult check_lemma_identities();
CheckResult check_corresponding_tribrackets();
CheckResult check_chain_maps();
CheckResult check_homology_agreement(int jobs = 1);
CheckResult check_mochizuki_family();
CheckResult check_link_invariants(int jobs = 1);
CheckResult check_reidemeister_invariance(int jobs = 1);
CheckResult check_surface_chains(int jobs = 1);
CheckResult check_smith_forms(uint64_t seed = 20240917, int count = 500);

/// Every check above, in that order.
std::vector<CheckResult> run_battery(int jobs = 1);

}  // namespace tknots
