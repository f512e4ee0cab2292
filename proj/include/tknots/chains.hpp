#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tknots/algebra.hpp"
#include "tknots/howell.hpp"
#include "tknots/smith.hpp"
#include "tknots/tribracket.hpp"

namespace tknots {

enum class Theory { SB, LB, N };
const char* theory_name(Theory t);
Theory parse_theory(const std::string& s);

/// SB: (x, a_1..a_n) with x in X and a_i in B.
/// LB: ((x,y_1),...,(x,y_n)) stored as base x and word (y_1..y_n).
struct Generator {
  int base = 0;
  std::vector<int> word;

  int degree() const { return static_cast<int>(word.size()); }
  bool degenerate() const;
  bool operator==(const Generator&) const = default;
  auto operator<=>(const Generator&) const = default;
};

/// Sparse chain over Z (modulus 0) or Z_m, keyed by nondegenerate basis index.
struct FormalChain {
  int degree = 0;
  int64_t modulus = 0;
  std::map<int64_t, int64_t> terms;

  void add(int64_t index, int64_t coeff);
  FormalChain& operator+=(const FormalChain& other);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const FormalChain&) const = default;
};

/// The nondegenerate quotient complex of one theory up to a degree cap, with
/// every boundary matrix built eagerly so the object is immutable afterwards.
class ChainTheory {
 public:
  static ChainTheory shadow(const ShadowBiquandle& sb, int cap = 4, int jobs = 1);
  static ChainTheory local(const HorizontalTribracket& t, int cap = 4, int jobs = 1);

  Theory theory() const { return theory_; }
  int cap() const { return cap_; }
  int base_size() const { return base_size_; }
  int letter_size() const { return letter_size_; }
  const ShadowBiquandle* shadow_biquandle() const { return sb_.get(); }
  const HorizontalTribracket* tribracket() const { return tri_.get(); }

  int64_t basis_size(int n) const;
  /// Basis index of g, or -1 if g is degenerate.
  int64_t index(const Generator& g) const;
  Generator generator(int n, int64_t index) const;

  /// All terms of the unquotiented boundary, degenerate ones included.
  std::vector<std::pair<Generator, int>> raw_boundary(const Generator& g) const;
  /// Boundary projected to the quotient.
  FormalChain boundary(const Generator& g) const;
  FormalChain boundary(const FormalChain& c) const;
  /// Rows index degree n-1, columns degree n. n ranges over 1..cap.
  const SparseMatrix& boundary_matrix(int n) const;

  FormalChain chain_of(const Generator& g, int64_t coeff = 1, int64_t modulus = 0) const;

 private:
  void check_degree(int n, int lo) const;
  void build(int jobs);

  Theory theory_ = Theory::SB;
  int cap_ = 0;
  int base_size_ = 0;
  int letter_size_ = 0;
  std::shared_ptr<const ShadowBiquandle> sb_;
  std::shared_ptr<const HorizontalTribracket> tri_;
  std::vector<SparseMatrix> boundaries_;  // index n
};

/// mu_n(x, a_1..a_n) = ((x, x*a_1), ..., (x, x*a_n)); eta is its inverse.
Generator mu(const ShadowBiquandle& sb, const Generator& g);
Generator eta(const ShadowBiquandle& sb, const Generator& g);
FormalChain mu(const ChainTheory& sb_theory, const ChainTheory& lb_theory, const FormalChain& c);
FormalChain eta(const ChainTheory& lb_theory, const ChainTheory& sb_theory, const FormalChain& c);

/// Finitely generated abelian group: Z^free_rank + sum Z_{torsion_i}. Over Z_m
/// the "free" summands are copies of Z_m and torsion lists the proper factors.
struct HomologyGroup {
  int degree = 0;
  int64_t modulus = 0;
  int free_rank = 0;
  std::vector<int64_t> torsion;  // divisibility chain, entries >= 2
  bool operator==(const HomologyGroup&) const = default;
};

/// Over Z from elementary divisors of the boundary matrices. Over Z_m the
/// group comes from universal coefficients and its order is cross-checked
/// against Howell-form kernel and image sizes mod m.
HomologyGroup homology(const ChainTheory& theory, int n, int64_t modulus = 0);
std::string to_string(const HomologyGroup& h);

/// Integral class coordinates of degree-n cycles relative to one Smith-form
/// presentation of H_n: torsion coordinates (reduced mod d_i) then free ones.
class HomologyCoordinates {
 public:
  HomologyCoordinates(const ChainTheory& theory, int n);

  int degree() const { return n_; }
  int free_rank() const { return free_rank_; }
  const std::vector<int64_t>& torsion() const { return torsion_; }
  /// Throws ContractError when c is not a cycle.
  std::vector<int64_t> coordinates(const FormalChain& c) const;

 private:
  const ChainTheory* theory_;
  int n_;
  int rank_n_ = 0;             // rank of boundary n
  IntMatrix v_inv_;            // from the Smith form of boundary n
  IntMatrix u_prime_;          // from the Smith form of the image block
  std::vector<int64_t> diag_;  // full diagonal of the image block (0 beyond its rank)
  int free_rank_ = 0;
  std::vector<int64_t> torsion_;
};

/// Dense cochain over all tuples of its theory: SB and LB tuples are
/// (x, w_1..w_n); N tuples of degree n have n+2 entries of X.
struct CochainTable {
  Theory theory = Theory::SB;
  int degree = 0;
  int64_t modulus = 2;
  int base_size = 0;    // radix of the first entry
  int letter_size = 0;  // radix of the remaining entries
  std::vector<int64_t> values;

  int arity() const { return theory == Theory::N ? degree + 2 : degree + 1; }
  static CochainTable zero(Theory t, int degree, int64_t m, int base_size, int letter_size);
  int64_t flat_index(const std::vector<int>& tuple) const;
  std::vector<int> tuple_of(int64_t flat) const;
  int64_t operator()(const std::vector<int>& tuple) const { return values[flat_index(tuple)]; }
  int64_t& at(const std::vector<int>& tuple) { return values[flat_index(tuple)]; }
  int64_t at(const Generator& g) const;
  /// theta evaluated on a chain, reduced mod m.
  int64_t evaluate(const ChainTheory& theory, const FormalChain& c) const;
  bool operator==(const CochainTable&) const = default;
};

/// delta(theta) = theta o boundary_{n+1}, evaluated generator by generator.
bool is_cocycle(const ChainTheory& theory, const CochainTable& theta);
/// theta in the row span of boundary_n mod m.
bool is_coboundary(const ChainTheory& theory, const CochainTable& theta);
/// Generators of the cocycle module Z^n(.; Z_m), from the left kernel of boundary_{n+1}.
std::vector<CochainTable> cocycle_basis(const ChainTheory& theory, int n, int64_t m);
/// delta(psi) as a degree n+1 cochain.
CochainTable coboundary(const ChainTheory& theory, const CochainTable& psi);

}  // namespace tknots
