#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tknots/errors.hpp"

namespace tknots {

/// Elements of every finite structure are dense indices 0..size-1.
using Element = int;

/// Raw nested table as read from JSON or handed in by callers.
using IntTable = std::vector<std::vector<int>>;

/// Dense row-major rows x cols table of elements.
class Table {
 public:
  Table() = default;
  Table(int rows, int cols, int fill = 0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  /// Validates rectangular shape and entry range [0, range).
  static Table from_rows(const IntTable& rows, int expected_rows, int expected_cols, int range,
                         const std::string& what);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  int& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  IntTable to_rows() const;
  bool operator==(const Table&) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

struct AxiomViolation {
  std::string axiom;
  std::vector<int> witness;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool passed() const { return violations.empty(); }
  void add(std::string axiom, std::vector<int> witness) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }
  bool has(const std::string& axiom) const;
  void append(const AxiomReport& other);
};

/// Thrown when construction-time validation finds axiom violations.
class AxiomError : public Error {
 public:
  AxiomError(const std::string& what, AxiomReport report)
      : Error(ErrorCode::kAxiomViolation, what), report_(std::move(report)) {}
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// Exhaustive check of the biquandle axioms: diagonal agreement, column
/// bijectivity of both operations, bijectivity of S(a,b) = (b over a, a under b),
/// and the three exchange identities. Malformed tables throw InputError.
AxiomReport check_biquandle(const IntTable& under, const IntTable& over);

class FiniteBiquandle {
 public:
  /// Validates and precomputes inverse tables; throws AxiomError on failure.
  static FiniteBiquandle from_tables(const IntTable& under, const IntTable& over);

  int size() const { return size_; }
  Element under(Element a, Element b) const { return under_(a, b); }
  Element over(Element a, Element b) const { return over_(a, b); }
  /// The unique c with c under b == a.
  Element under_inv(Element a, Element b) const { return under_inv_(a, b); }
  /// The unique c with c over b == a.
  Element over_inv(Element a, Element b) const { return over_inv_(a, b); }

  std::pair<Element, Element> S(Element a, Element b) const {
    return {over(b, a), under(a, b)};
  }
  /// The unique (a, b) with S(a, b) == (c, d).
  std::pair<Element, Element> solve_S(Element c, Element d) const;

  bool is_quandle() const;
  const Table& under_table() const { return under_; }
  const Table& over_table() const { return over_; }

 private:
  int size_ = 0;
  Table under_, over_, under_inv_, over_inv_;
  std::vector<int> s_inverse_;  // index c*m+d -> a*m+b
};

/// Column bijectivity of the action and the compatibility identity
/// (x*a)*(b over a) == (x*b)*(a under b).
AxiomReport check_bset(const FiniteBiquandle& bq, const IntTable& action);

class ShadowBiquandle;
ShadowBiquandle build_strong_connectivity(ShadowBiquandle sb);

class FiniteBSet {
 public:
  static FiniteBSet from_action(const FiniteBiquandle& bq, const IntTable& action);

  int size() const { return action_.rows(); }
  Element act(Element x, Element a) const { return action_(x, a); }
  /// x *^{-1} a
  Element act_inv(Element x, Element a) const { return action_inv_(x, a); }
  bool strongly_connected() const { return strongly_connected_; }
  /// x \searrow y: the unique a with x*a == y. Requires strong connectivity.
  Element searrow(Element x, Element y) const;
  const Table& action_table() const { return action_; }

 private:
  friend class ShadowBiquandle;
  friend ShadowBiquandle build_strong_connectivity(ShadowBiquandle sb);
  Table action_, action_inv_;
  bool strongly_connected_ = false;
  Table searrow_;
};

class ShadowBiquandle {
 public:
  /// Validates the action against the biquandle. Strong connectivity is left
  /// unset until build_strong_connectivity runs.
  static ShadowBiquandle create(FiniteBiquandle bq, const IntTable& action);

  const FiniteBiquandle& biquandle() const { return bq_; }
  const FiniteBSet& bset() const { return bset_; }
  int biquandle_size() const { return bq_.size(); }
  int bset_size() const { return bset_.size(); }

  Element under(Element a, Element b) const { return bq_.under(a, b); }
  Element over(Element a, Element b) const { return bq_.over(a, b); }
  Element act(Element x, Element a) const { return bset_.act(x, a); }
  Element act_inv(Element x, Element a) const { return bset_.act_inv(x, a); }
  bool strongly_connected() const { return bset_.strongly_connected(); }
  Element searrow(Element x, Element y) const { return bset_.searrow(x, y); }

  /// Human-readable element names (ring elements for Alexander quandles).
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  friend ShadowBiquandle build_strong_connectivity(ShadowBiquandle sb);
  FiniteBiquandle bq_;
  FiniteBSet bset_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Sets the strong-connectivity flag and fills the searrow table when every
/// row a -> x*a of the action is a bijection onto X.
ShadowBiquandle build_strong_connectivity(ShadowBiquandle sb);

/// The three inverse-operation identities every shadow biquandle satisfies,
/// e.g. (x *^{-1} (a under b)) *^{-1} b == (x *^{-1} (b over a)) *^{-1} a.
/// Exhaustive over x in X and a, b in B.
AxiomReport check_inverse_identities(const ShadowBiquandle& sb);

/// The four searrow identities of a strongly connected shadow biquandle:
/// x*(x\y) = y, y*^{-1}(x\y) = x, (y*^{-1}a)\y = a, x\(x*a) = a.
AxiomReport check_searrow_identities(const ShadowBiquandle& sb);

/// Finite quotient ring Z_n[t]/(p(t)) with p monic and of unit constant term,
/// so t is invertible. Elements are coefficient vectors of length deg p,
/// encoded as base-n integers (constant term least significant).
class AlexanderRing {
 public:
  /// p is the coefficient list, constant term first.
  AlexanderRing(int n, std::vector<int64_t> p);

  int modulus() const { return n_; }
  int degree() const { return degree_; }
  int size() const { return size_; }

  std::vector<int> coefficients(Element e) const;
  Element from_coefficients(const std::vector<int64_t>& c) const;
  Element from_int(int64_t k) const;
  Element t() const { return t_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const { return sub(from_int(0), a); }
  Element mul(Element a, Element b) const;
  /// Inverse by exhaustive search; nullopt for non-units.
  std::optional<Element> inverse(Element a) const;
  std::string label(Element e) const;

 private:
  int n_ = 0;
  int degree_ = 0;
  int size_ = 0;
  std::vector<int64_t> p_;  // reduced mod n, monic
  Element t_ = 0;
};

/// Dihedral quandle of order n as a shadow quandle with X = Z_n and * = under.
ShadowBiquandle dihedral(int n);

/// Alexander quandle a under b = t a + (1-t) b over Z_n[t]/(p), X = ring, * = under.
ShadowBiquandle alexander(int n, const std::vector<int64_t>& p);

}  // namespace tknots
