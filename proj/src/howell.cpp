#include "tknots/howell.hpp"

#include <numeric>

#include "tknots/checked.hpp"

namespace tknots {

namespace {

int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

// dst = a*x + b*y mod m, entrywise
ModVector combine(int64_t a, const ModVector& x, int64_t b, const ModVector& y, int64_t m) {
  ModVector out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = (mulmod(a, x[i], m) + mulmod(b, y[i], m)) % m;
  return out;
}

// dst += f * src on columns from..end (earlier entries of both are zero)
void axpy_from(ModVector& dst, int64_t f, const ModVector& src, size_t from, int64_t m) {
  for (size_t i = from; i < dst.size(); ++i)
    if (src[i] != 0) dst[i] = (dst[i] + mulmod(f, src[i], m)) % m;
}

bool is_zero(const ModVector& v) {
  for (int64_t e : v)
    if (e != 0) return false;
  return true;
}

// A unit u with u*a == gcd(a, m) mod m.
int64_t normalizing_unit(int64_t a, int64_t m) {
  const int64_t g = std::gcd(a, m);
  const int64_t mp = m / g;
  int64_t u = mp == 1 ? 1 : checked::inverse_mod(a / g, mp);
  while (std::gcd(u, m) != 1) u += mp;
  return u % m;
}

}  // namespace

HowellForm::HowellForm(std::vector<ModVector> work, int cols, int64_t m) : m_(m), cols_(cols) {
  if (m < 2) throw ContractError("Howell form needs modulus >= 2");
  for (auto& r : work) {
    if (static_cast<int>(r.size()) != cols) throw ContractError("Howell form: ragged rows");
    for (auto& e : r) e = checked::mod(e, m);
  }
  std::erase_if(work, is_zero);

  for (int j = 0; j < cols && !work.empty(); ++j) {
    // Prefer a unit pivot: then every other row is cleared by one row update.
    int p = -1;
    for (size_t i = 0; i < work.size(); ++i) {
      if (work[i][j] == 0) continue;
      if (p < 0 || std::gcd(work[i][j], m) == 1) p = static_cast<int>(i);
      if (std::gcd(work[i][j], m) == 1) break;
    }
    if (p < 0) continue;
    const int64_t pivot_inv = checked::inverse_mod(work[p][j], m);
    for (size_t i = 0; i < work.size(); ++i) {
      if (static_cast<int>(i) == p || work[i][j] == 0) continue;
      if (pivot_inv != 0) {
        const int64_t f = m - mulmod(work[i][j], pivot_inv, m);
        axpy_from(work[i], f, work[p], j, m);
        continue;
      }
      const int64_t a = work[p][j], b = work[i][j];
      const auto x = checked::xgcd(a, b);
      const int64_t s = checked::mod(x.s, m), t = checked::mod(x.t, m);
      ModVector np = combine(s, work[p], t, work[i], m);
      ModVector ni = combine(b / x.g % m, work[p], checked::mod(-(a / x.g), m), work[i], m);
      work[p] = std::move(np);
      work[i] = std::move(ni);
    }
    if (p < 0) continue;
    ModVector pivot = std::move(work[p]);
    work.erase(work.begin() + p);
    const int64_t u = normalizing_unit(pivot[j], m);
    for (auto& e : pivot) e = mulmod(e, u, m);
    const int64_t g = pivot[j];
    ModVector ann(pivot.size());
    for (size_t k = 0; k < pivot.size(); ++k) ann[k] = mulmod(m / g, pivot[k], m);
    if (!is_zero(ann)) work.push_back(std::move(ann));
    std::erase_if(work, is_zero);
    rows_.push_back(std::move(pivot));
    pivots_.push_back(j);
  }

  for (size_t i = 0; i < rows_.size(); ++i) {
    const int j = pivots_[i];
    const int64_t g = rows_[i][j];
    for (size_t h = 0; h < i; ++h) {
      const int64_t q = rows_[h][j] / g;
      if (q != 0) rows_[h] = combine(1, rows_[h], m - q, rows_[i], m);
    }
  }
}

HowellForm HowellForm::of(const IntMatrix& a, int64_t m) {
  std::vector<ModVector> rows(a.rows(), ModVector(a.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  return HowellForm(std::move(rows), a.cols(), m);
}

ModVector HowellForm::reduce(ModVector v) const {
  if (static_cast<int>(v.size()) != cols_) throw ContractError("Howell reduce: length mismatch");
  for (auto& e : v) e = checked::mod(e, m_);
  for (size_t i = 0; i < rows_.size(); ++i) {
    const int64_t q = v[pivots_[i]] / rows_[i][pivots_[i]];
    if (q != 0) v = combine(1, v, m_ - q, rows_[i], m_);
  }
  return v;
}

bool HowellForm::contains(const ModVector& v) const { return is_zero(reduce(v)); }

std::vector<int64_t> HowellForm::row_orders() const {
  std::vector<int64_t> out;
  for (size_t i = 0; i < rows_.size(); ++i) out.push_back(m_ / rows_[i][pivots_[i]]);
  return out;
}

std::vector<ModVector> left_kernel_mod(const IntMatrix& a, int64_t m) {
  const int r = a.rows(), c = a.cols();
  std::vector<ModVector> aug(r, ModVector(c + r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < c; ++j) aug[i][j] = a(i, j);
    aug[i][c + i] = 1;
  }
  HowellForm h(std::move(aug), c + r, m);
  std::vector<ModVector> out;
  for (size_t i = 0; i < h.rows().size(); ++i)
    if (h.pivots()[i] >= c) out.emplace_back(h.rows()[i].begin() + c, h.rows()[i].end());
  return out;
}

}  // namespace tknots
