#pragma once

#include <vector>

#include "tknots/errors.hpp"
#include "tknots/matrix.hpp"

namespace tknots {

/// U * M * V = D with U, V unimodular; inverses are carried along so that
/// callers never invert integer matrices themselves.
struct SmithForm {
  IntMatrix U, D, V, U_inv, V_inv;
  int rank = 0;
  std::vector<int64_t> diagonal;  // d_1 | d_2 | ... | d_rank, all positive
};

/// The same in arbitrary precision, so no intermediate can overflow.
struct ExactSmithForm {
  BigMatrix U, D, V, U_inv, V_inv;
  int rank = 0;
  std::vector<BigInt> diagonal;
};

/// Smallest-pivot Smith normal form with transforms, computed exactly and
/// converted at the end; throws OverflowError if a transform entry does not fit.
SmithForm smith_normal_form(const IntMatrix& m);
ExactSmithForm smith_normal_form_exact(const IntMatrix& m);

struct ElementaryDivisors {
  int rank = 0;
  std::vector<int64_t> divisors;  // invariant factors > 1, ascending
};

/// Rank and nontrivial invariant factors without transforms: sparse unit-pivot
/// elimination first, dense Smith form on whatever is left.
ElementaryDivisors elementary_divisors(const SparseMatrix& m);
ElementaryDivisors elementary_divisors(const IntMatrix& m);

}  // namespace tknots
