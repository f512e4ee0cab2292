#include "tknots/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>

#include "tknots/checked.hpp"

namespace tknots {

namespace {

// Scalar operations: overflow-checked for int64, plain for BigInt.
int64_t add(int64_t a, int64_t b) { return checked::add(a, b); }
int64_t sub(int64_t a, int64_t b) { return checked::sub(a, b); }
int64_t mul(int64_t a, int64_t b) { return checked::mul(a, b); }
int64_t magnitude(int64_t a) {
  if (a == std::numeric_limits<int64_t>::min()) throw OverflowError("int64 overflow in abs");
  return std::llabs(a);
}
int64_t floor_div(int64_t a, int64_t b) { return checked::floor_div(a, b); }

BigInt add(const BigInt& a, const BigInt& b) { return a + b; }
BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt magnitude(const BigInt& a) { return abs(a); }
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates
  if (q * b != a && ((a < 0) != (b < 0))) --q;
  return q;
}

template <class S>
struct Xgcd {
  S g, s, t;
};

template <class S>
Xgcd<S> xgcd(S a, S b) {
  S old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const S q = old_r / r;
    S tmp = sub(old_r, mul(q, r));
    old_r = r;
    r = tmp;
    tmp = sub(old_s, mul(q, s));
    old_s = s;
    s = tmp;
    tmp = sub(old_t, mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {sub(S(0), old_r), sub(S(0), old_s), sub(S(0), old_t)};
  return {old_r, old_s, old_t};
}

// Elimination state over matrix type M with scalar S. Transforms are only
// maintained when track is set.
template <class M, class S>
class Reducer {
 public:
  Reducer(M a, bool track) : a_(std::move(a)), track_(track) {
    if (track_) {
      u_ = u_inv_ = M::identity(a_.rows());
      v_ = v_inv_ = M::identity(a_.cols());
    }
  }

  // Smallest pivot first, nearest-integer quotients, and divisibility settled
  // on the diagonal at the end rather than interleaved with elimination.
  void run() {
    const int r = a_.rows(), c = a_.cols();
    int rank = 0;
    for (int t = 0; t < std::min(r, c); ++t) {
      if (!bring_smallest(t)) break;
      for (;;) {
        bool clean = true;
        for (int i = t + 1; i < r; ++i)
          if (a_(i, t) != 0) {
            add_row(i, neg(nearest_div(a_(i, t), a_(t, t))), t);
            clean = clean && a_(i, t) == 0;
          }
        for (int j = t + 1; j < c; ++j)
          if (a_(t, j) != 0) {
            add_col(j, neg(nearest_div(a_(t, j), a_(t, t))), t);
            clean = clean && a_(t, j) == 0;
          }
        if (clean) break;
        bring_smallest_in_cross(t);
      }
      ++rank;
    }
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        if (a_(j, j) % a_(i, i) != 0) merge_diagonal(i, j);
    for (int i = 0; i < rank; ++i) {
      if (a_(i, i) < 0) negate_row(i);
      diagonal_.push_back(a_(i, i));
    }
  }

  M a_, u_, u_inv_, v_, v_inv_;
  std::vector<S> diagonal_;

 private:
  static S neg(const S& a) { return sub(S(0), a); }

  // Quotient rounded to the nearest integer, so remainders stay within |b|/2.
  static S nearest_div(const S& a, const S& b) {
    const S q = floor_div(a, b);
    const S r = sub(a, mul(q, b));
    return magnitude(add(r, r)) > magnitude(b) ? add(q, S(1)) : q;
  }

  bool bring_smallest(int t) {
    int bi = -1, bj = -1;
    S best = 0;
    int64_t best_fill = 0;
    std::vector<int> row_fill(a_.rows()), col_fill(a_.cols());
    for (int i = t; i < a_.rows(); ++i)
      for (int j = t; j < a_.cols(); ++j)
        if (a_(i, j) != 0) {
          ++row_fill[i];
          ++col_fill[j];
        }
    for (int i = t; i < a_.rows(); ++i)
      for (int j = t; j < a_.cols(); ++j) {
        if (a_(i, j) == 0) continue;
        const S v = magnitude(a_(i, j));
        const int64_t fill = static_cast<int64_t>(row_fill[i] - 1) * (col_fill[j] - 1);
        if (bi < 0 || v < best || (v == best && fill < best_fill)) {
          best = v;
          best_fill = fill;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void bring_smallest_in_cross(int t) {
    S best = magnitude(a_(t, t));
    int bi = -1, bj = -1;
    for (int i = t + 1; i < a_.rows(); ++i)
      if (a_(i, t) != 0 && magnitude(a_(i, t)) < best) {
        best = magnitude(a_(i, t));
        bi = i;
        bj = -1;
      }
    for (int j = t + 1; j < a_.cols(); ++j)
      if (a_(t, j) != 0 && magnitude(a_(t, j)) < best) {
        best = magnitude(a_(t, j));
        bj = j;
        bi = -1;
      }
    if (bi >= 0) swap_rows(t, bi);
    if (bj >= 0) swap_cols(t, bj);
  }

  // diag(a, b) at (i, i), (j, j) becomes diag(gcd, lcm) via
  // L = [[s, t], [-b/g, a/g]] on rows and R = [[1, -t b/g], [1, s a/g]] on columns.
  void merge_diagonal(int i, int j) {
    const S a = a_(i, i), b = a_(j, j);
    const auto x = xgcd<S>(a, b);
    const S ag = a / x.g, bg = b / x.g;
    row_combine(i, j, x.s, x.t, neg(bg), ag);
    col_combine(i, j, S(1), neg(mul(x.t, bg)), S(1), mul(x.s, ag));
  }

  // rows (i, j) <- [[p, q], [r, s]] * rows (i, j); determinant 1.
  void row_combine(int i, int j, const S& p, const S& q, const S& r, const S& s) {
    auto apply = [&](M& m) {
      for (int c = 0; c < m.cols(); ++c) {
        const S x = m(i, c), y = m(j, c);
        m(i, c) = add(mul(p, x), mul(q, y));
        m(j, c) = add(mul(r, x), mul(s, y));
      }
    };
    apply(a_);
    if (!track_) return;
    apply(u_);
    // u_inv <- u_inv * [[s, -q], [-r, p]]
    for (int k = 0; k < u_inv_.rows(); ++k) {
      const S x = u_inv_(k, i), y = u_inv_(k, j);
      u_inv_(k, i) = sub(mul(x, s), mul(y, r));
      u_inv_(k, j) = sub(mul(y, p), mul(x, q));
    }
  }

  // cols (i, j) <- cols (i, j) * [[p, q], [r, s]]; determinant 1.
  void col_combine(int i, int j, const S& p, const S& q, const S& r, const S& s) {
    auto apply = [&](M& m) {
      for (int k = 0; k < m.rows(); ++k) {
        const S x = m(k, i), y = m(k, j);
        m(k, i) = add(mul(x, p), mul(y, r));
        m(k, j) = add(mul(x, q), mul(y, s));
      }
    };
    apply(a_);
    if (!track_) return;
    apply(v_);
    // v_inv <- [[s, -q], [-r, p]] * v_inv
    for (int c = 0; c < v_inv_.cols(); ++c) {
      const S x = v_inv_(i, c), y = v_inv_(j, c);
      v_inv_(i, c) = sub(mul(s, x), mul(q, y));
      v_inv_(j, c) = sub(mul(p, y), mul(r, x));
    }
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < a_.cols(); ++k) std::swap(a_(i, k), a_(j, k));
    if (!track_) return;
    for (int k = 0; k < u_.cols(); ++k) std::swap(u_(i, k), u_(j, k));
    for (int k = 0; k < u_inv_.rows(); ++k) std::swap(u_inv_(k, i), u_inv_(k, j));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < a_.rows(); ++k) std::swap(a_(k, i), a_(k, j));
    if (!track_) return;
    for (int k = 0; k < v_.rows(); ++k) std::swap(v_(k, i), v_(k, j));
    for (int k = 0; k < v_inv_.cols(); ++k) std::swap(v_inv_(i, k), v_inv_(j, k));
  }

  // row dst += k * row src
  void add_row(int dst, const S& k, int src) {
    if (k == 0) return;
    for (int c = 0; c < a_.cols(); ++c) a_(dst, c) = add(a_(dst, c), mul(k, a_(src, c)));
    if (!track_) return;
    for (int c = 0; c < u_.cols(); ++c) u_(dst, c) = add(u_(dst, c), mul(k, u_(src, c)));
    for (int r = 0; r < u_inv_.rows(); ++r) u_inv_(r, src) = sub(u_inv_(r, src), mul(k, u_inv_(r, dst)));
  }

  // col dst += k * col src
  void add_col(int dst, const S& k, int src) {
    if (k == 0) return;
    for (int r = 0; r < a_.rows(); ++r) a_(r, dst) = add(a_(r, dst), mul(k, a_(r, src)));
    if (!track_) return;
    for (int r = 0; r < v_.rows(); ++r) v_(r, dst) = add(v_(r, dst), mul(k, v_(r, src)));
    for (int c = 0; c < v_inv_.cols(); ++c) v_inv_(src, c) = sub(v_inv_(src, c), mul(k, v_inv_(dst, c)));
  }

  void negate_row(int i) {
    for (int c = 0; c < a_.cols(); ++c) a_(i, c) = neg(a_(i, c));
    if (!track_) return;
    for (int c = 0; c < u_.cols(); ++c) u_(i, c) = neg(u_(i, c));
    for (int r = 0; r < u_inv_.rows(); ++r) u_inv_(r, i) = neg(u_inv_(r, i));
  }

  bool track_;
};

}  // namespace

ExactSmithForm smith_normal_form_exact(const IntMatrix& m) {
  Reducer<BigMatrix, BigInt> red(BigMatrix(m), true);
  red.run();
  ExactSmithForm out;
  out.D = std::move(red.a_);
  out.U = std::move(red.u_);
  out.U_inv = std::move(red.u_inv_);
  out.V = std::move(red.v_);
  out.V_inv = std::move(red.v_inv_);
  out.diagonal = std::move(red.diagonal_);
  out.rank = static_cast<int>(out.diagonal.size());
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const ExactSmithForm e = smith_normal_form_exact(m);
  SmithForm out;
  out.D = e.D.to_int();
  out.U = e.U.to_int();
  out.U_inv = e.U_inv.to_int();
  out.V = e.V.to_int();
  out.V_inv = e.V_inv.to_int();
  out.rank = e.rank;
  for (int i = 0; i < e.rank; ++i) out.diagonal.push_back(out.D(i, i));
  return out;
}

ElementaryDivisors elementary_divisors(const IntMatrix& m) {
  Reducer<IntMatrix, int64_t> red(m, false);
  red.run();
  ElementaryDivisors out;
  out.rank = static_cast<int>(red.diagonal_.size());
  for (int64_t d : red.diagonal_)
    if (d > 1) out.divisors.push_back(d);
  return out;
}

ElementaryDivisors elementary_divisors(const SparseMatrix& m) {
  // Markowitz-style elimination on unit pivots. Each such pivot contributes a
  // unit invariant factor and can be removed together with its row and column.
  std::vector<std::map<int, int64_t>> rows(m.rows);
  std::vector<std::set<int>> col_rows(m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (auto [i, v] : m.columns[j]) {
      rows[i][j] = v;
      col_rows[j].insert(i);
    }

  int rank = 0;
  for (;;) {
    int pr = -1, pc = -1;
    int64_t best = -1;
    for (int i = 0; i < m.rows && best != 0; ++i) {
      const int64_t rsize = static_cast<int64_t>(rows[i].size()) - 1;
      for (auto [j, v] : rows[i]) {
        if (v != 1 && v != -1) continue;
        const int64_t cost = rsize * (static_cast<int64_t>(col_rows[j].size()) - 1);
        if (best < 0 || cost < best) {
          best = cost;
          pr = i;
          pc = j;
          if (cost == 0) break;
        }
      }
    }
    if (pr < 0) break;

    const int64_t pv = rows[pr][pc];
    const std::vector<int> targets(col_rows[pc].begin(), col_rows[pc].end());
    for (int i : targets) {
      if (i == pr) continue;
      const int64_t factor = checked::mul(rows[i][pc], pv);  // pv = pv^{-1}
      for (auto [j, v] : rows[pr]) {
        auto it = rows[i].find(j);
        const int64_t nv = checked::sub(it == rows[i].end() ? 0 : it->second, checked::mul(factor, v));
        if (nv == 0) {
          if (it != rows[i].end()) rows[i].erase(it);
          col_rows[j].erase(i);
        } else if (it == rows[i].end()) {
          rows[i].emplace(j, nv);
          col_rows[j].insert(i);
        } else {
          it->second = nv;
        }
      }
    }
    for (auto [j, v] : rows[pr]) col_rows[j].erase(pr);
    rows[pr].clear();
    ++rank;
  }

  std::vector<int> live_rows, live_cols;
  std::vector<int> col_index(m.cols, -1);
  for (int i = 0; i < m.rows; ++i)
    if (!rows[i].empty()) live_rows.push_back(i);
  for (int j = 0; j < m.cols; ++j)
    if (!col_rows[j].empty()) {
      col_index[j] = static_cast<int>(live_cols.size());
      live_cols.push_back(j);
    }
  IntMatrix rest(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
  for (size_t r = 0; r < live_rows.size(); ++r)
    for (auto [j, v] : rows[live_rows[r]]) rest(static_cast<int>(r), col_index[j]) = v;

  ElementaryDivisors out = elementary_divisors(rest);
  out.rank += rank;
  return out;
}

}  // namespace tknots
