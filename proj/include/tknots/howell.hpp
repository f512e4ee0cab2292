#pragma once

#include <cstdint>
#include <vector>

#include "tknots/matrix.hpp"

namespace tknots {

using ModVector = std::vector<int64_t>;

/// Howell normal form of the row span of a matrix over Z_m (m >= 2). Works for
/// composite m, where plain Gaussian elimination does not.
class HowellForm {
 public:
  HowellForm(std::vector<ModVector> rows, int cols, int64_t m);
  static HowellForm of(const IntMatrix& a, int64_t m);

  int64_t modulus() const { return m_; }
  int cols() const { return cols_; }
  const std::vector<ModVector>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Reduces v against the rows; v is in the span iff the result is zero.
  ModVector reduce(ModVector v) const;
  bool contains(const ModVector& v) const;
  /// log_m is not an integer in general, so the size is reported as the list
  /// of per-row orders m / gcd(pivot, m); their product is the span size.
  std::vector<int64_t> row_orders() const;

 private:
  int64_t m_;
  int cols_;
  std::vector<ModVector> rows_;
  std::vector<int> pivots_;
};

/// Generators of {x : x A = 0 mod m}.
std::vector<ModVector> left_kernel_mod(const IntMatrix& a, int64_t m);

}  // namespace tknots
