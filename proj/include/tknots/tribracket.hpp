#pragma once

#include <vector>

#include "tknots/algebra.hpp"

namespace tknots {

using CubeTable = std::vector<std::vector<std::vector<int>>>;

/// H1 (latin in each slot) and H2 by direct quadruple enumeration.
AxiomReport check_tribracket(const CubeTable& table);

/// Ternary table [x,y,z] with all three slot inverses precomputed.
class HorizontalTribracket {
 public:
  /// Validates H1/H2; throws AxiomError on failure.
  static HorizontalTribracket from_table(const CubeTable& table);

  int size() const { return k_; }
  Element operator()(Element x, Element y, Element z) const { return t_[idx(x, y, z)]; }
  /// The x with [x,y,z] = w.
  Element solve_first(Element w, Element y, Element z) const { return s1_[idx(w, y, z)]; }
  /// The y with [x,y,z] = w.
  Element solve_second(Element x, Element w, Element z) const { return s2_[idx(x, w, z)]; }
  /// The z with [x,y,z] = w.
  Element solve_third(Element x, Element y, Element w) const { return s3_[idx(x, y, w)]; }
  CubeTable to_cube() const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
  bool operator==(const HorizontalTribracket& o) const { return k_ == o.k_ && t_ == o.t_; }

 private:
  int idx(int x, int y, int z) const { return (x * k_ + y) * k_ + z; }
  int k_ = 0;
  std::vector<int> t_, s1_, s2_, s3_;
  std::vector<std::string> labels_;
};

/// Element (base, fiber) of the fiber {base} x X of the local biquandle.
struct LocalPair {
  Element base = 0;
  Element fiber = 0;
  bool operator==(const LocalPair&) const = default;
  auto operator<=>(const LocalPair&) const = default;
};

/// (x,y) under_x (x,z) = (z, [x,y,z]). Throws ContractError on base mismatch.
LocalPair local_under(const HorizontalTribracket& t, LocalPair p, LocalPair q);
/// (x,y) over_x (x,z) = (z, [x,z,y]).
LocalPair local_over(const HorizontalTribracket& t, LocalPair p, LocalPair q);

/// [x,y,z] = y*((x\z) over (x\y)); the second expression z*((x\y) under (x\z))
/// is evaluated too and any disagreement throws InternalError.
HorizontalTribracket corresponding_tribracket(const ShadowBiquandle& sb);

/// [x,y,z] = x - y + z over Z_n.
HorizontalTribracket dihedral_tribracket(int n);
/// [x,y,z] = -t x + t y + z over Z_n[t]/(p).
HorizontalTribracket alexander_tribracket(int n, const std::vector<int64_t>& p);

}  // namespace tknots
