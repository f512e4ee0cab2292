// One line per acceptance criterion; exit status 1 if any is red.
#include <chrono>
#include <cstdio>
#include <functional>

#include "tknots/verify.hpp"

using namespace tknots;

int main() {
  const std::vector<std::function<CheckResult()>> criteria = {
      [] { return check_axiom_battery(); },
      [] { return check_lemma_identities(); },
      [] { return check_corresponding_tribrackets(); },
      [] { return check_chain_maps(); },
      [] { return check_homology_agreement(); },
      [] { return check_mochizuki_family(); },
      [] { return check_link_invariants(); },
      [] { return check_reidemeister_invariance(); },
      [] { return check_surface_chains(); },
      [] { return check_smith_forms(); },
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = criteria[i]();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", i + 1, r.name.c_str(), secs,
                r.detail.c_str());
    failed += !r.passed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
