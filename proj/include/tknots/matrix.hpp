#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tknots {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int64_t operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  int64_t& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<std::vector<int64_t>> to_rows() const;
  IntMatrix transposed() const;
  /// Overflow-checked product.
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix&) const = default;
  bool is_zero() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> data_;
};

/// Column-sparse integer matrix; each column is a list of (row, value) with
/// strictly increasing rows and no zero values.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int64_t>>> columns;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}
  IntMatrix to_dense() const;
  int64_t nonzeros() const;
};

/// Exact determinant by fraction-free elimination (square input).
int64_t determinant(const IntMatrix& m);

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision dense matrix; used where transforms may outgrow int64.
class BigMatrix {
 public:
  BigMatrix() = default;
  BigMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  explicit BigMatrix(const IntMatrix& m);

  static BigMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const BigInt& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  BigInt& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }

  BigMatrix operator*(const BigMatrix& o) const;
  bool operator==(const BigMatrix&) const = default;
  /// Throws OverflowError when an entry leaves the int64 range.
  IntMatrix to_int() const;
  BigInt max_abs() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

BigInt determinant(const BigMatrix& m);

}  // namespace tknots
