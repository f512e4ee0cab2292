#include "tknots/matrix.hpp"

#include <algorithm>
#include <limits>

#include "tknots/checked.hpp"

namespace tknots {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.front().size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("matrix rows have unequal length");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<int64_t>> out(rows_, std::vector<int64_t>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw ContractError("matrix product: inner dimensions differ");
  IntMatrix p(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) p(i, j) = checked::axpy(p(i, j), a, o(k, j));
    }
  return p;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](int64_t v) { return v == 0; });
}

IntMatrix SparseMatrix::to_dense() const {
  IntMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (auto [i, v] : columns[j]) m(i, j) = v;
  return m;
}

int64_t SparseMatrix::nonzeros() const {
  int64_t n = 0;
  for (const auto& c : columns) n += static_cast<int64_t>(c.size());
  return n;
}

int64_t determinant(const IntMatrix& in) {
  if (in.rows() != in.cols()) throw ContractError("determinant of a non-square matrix");
  const int n = in.rows();
  if (n == 0) return 1;
  IntMatrix a = in;
  int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        const int64_t num = checked::sub(checked::mul(a(i, j), a(k, k)),
                                         checked::mul(a(i, k), a(k, j)));
        a(i, j) = num / prev;  // exact by Sylvester's identity
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

BigMatrix::BigMatrix(const IntMatrix& m) : BigMatrix(m.rows(), m.cols()) {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

BigMatrix BigMatrix::identity(int n) {
  BigMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::operator*(const BigMatrix& o) const {
  if (cols_ != o.rows_) throw ContractError("matrix product: inner dimensions differ");
  BigMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  return out;
}

IntMatrix BigMatrix::to_int() const {
  static const BigInt lo = std::numeric_limits<int64_t>::min(), hi = std::numeric_limits<int64_t>::max();
  IntMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const BigInt& v = (*this)(i, j);
      if (v < lo || v > hi) throw OverflowError("matrix entry does not fit in int64");
      out(i, j) = static_cast<int64_t>(v);
    }
  return out;
}

BigInt BigMatrix::max_abs() const {
  BigInt best = 0;
  for (const auto& v : data_) best = std::max(best, BigInt(abs(v)));
  return best;
}

BigInt determinant(const BigMatrix& in) {
  if (in.rows() != in.cols()) throw ContractError("determinant of a non-square matrix");
  const int n = in.rows();
  if (n == 0) return 1;
  BigMatrix a = in;
  BigInt sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace tknots
