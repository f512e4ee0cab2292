#include "search.hpp"

#include <algorithm>
#include <thread>

namespace tknots::detail {

bool Search::assign(std::vector<int>& vals, int var, int value, std::vector<int>& trail) const {
  std::vector<int> queue{var};
  vals[var] = value;
  trail.push_back(var);
  std::vector<int> newly;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int id : by_var_[queue[head]]) {
      newly.clear();
      Assigner a(vals, newly);
      const bool ok = rules_[id](a);
      for (int v : newly) {
        trail.push_back(v);
        queue.push_back(v);
      }
      if (!ok) return false;
    }
  }
  return true;
}

void Search::dfs(std::vector<int>& vals, std::vector<std::vector<int>>& out) const {
  const auto it = std::find(vals.begin(), vals.end(), -1);
  if (it == vals.end()) {
    out.push_back(vals);
    return;
  }
  const int var = static_cast<int>(it - vals.begin());
  for (int value = 0; value < domains_[var]; ++value) {
    std::vector<int> trail;
    if (assign(vals, var, value, trail)) dfs(vals, out);
    for (int v : trail) vals[v] = -1;
  }
}

std::vector<std::vector<int>> Search::solve(int jobs) const {
  std::vector<std::vector<int>> out;
  if (domains_.empty()) {
    out.emplace_back();
    return out;
  }
  const int branches = domains_[0];
  std::vector<std::vector<std::vector<int>>> parts(branches);
  auto run = [&](int first) {
    std::vector<int> vals(domains_.size(), -1);
    std::vector<int> trail;
    if (assign(vals, 0, first, trail)) dfs(vals, parts[first]);
  };
  jobs = std::clamp(jobs, 1, std::max(1, branches));
  if (jobs == 1) {
    for (int b = 0; b < branches; ++b) run(b);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
      pool.emplace_back([&, j] {
        for (int b = j; b < branches; b += jobs) run(b);
      });
    for (auto& t : pool) t.join();
  }
  for (auto& p : parts)
    for (auto& v : p) out.push_back(std::move(v));
  return out;
}

}  // namespace tknots::detail
