#pragma once

// Small propagating backtracker shared by the coloring enumerators.

#include <functional>
#include <vector>

namespace tknots::detail {

/// Assigns forced values through set(); returns false on a contradiction.
class Assigner {
 public:
  Assigner(std::vector<int>& vals, std::vector<int>& newly) : vals_(vals), newly_(newly) {}
  int operator[](int var) const { return vals_[var]; }
  bool known(int var) const { return vals_[var] >= 0; }
  bool set(int var, int value) {
    if (vals_[var] < 0) {
      vals_[var] = value;
      newly_.push_back(var);
      changed_ = true;
      return true;
    }
    return vals_[var] == value;
  }
  bool changed() {
    const bool c = changed_;
    changed_ = false;
    return c;
  }

 private:
  std::vector<int>& vals_;
  std::vector<int>& newly_;
  bool changed_ = false;
};

using Rule = std::function<bool(Assigner&)>;

class Search {
 public:
  explicit Search(std::vector<int> domains) : domains_(std::move(domains)), by_var_(domains_.size()) {}

  void add(const std::vector<int>& vars, Rule rule) {
    const int id = static_cast<int>(rules_.size());
    rules_.push_back(std::move(rule));
    for (int v : vars) by_var_[v].push_back(id);
  }

  /// All complete assignments, ordered lexicographically by variable index.
  /// Root branches (values of variable 0) may run on separate threads.
  std::vector<std::vector<int>> solve(int jobs) const;

 private:
  bool assign(std::vector<int>& vals, int var, int value, std::vector<int>& trail) const;
  void dfs(std::vector<int>& vals, std::vector<std::vector<int>>& out) const;

  std::vector<int> domains_;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> by_var_;
};

}  // namespace tknots::detail
