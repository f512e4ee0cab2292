#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "tknots/howell.hpp"
#include "tknots/smith.hpp"

using namespace tknots;

namespace {

void check_smith(const IntMatrix& m) {
  const SmithForm s = smith_normal_form(m);
  CHECK(s.U * m * s.V == s.D);
  CHECK(s.U * s.U_inv == IntMatrix::identity(m.rows()));
  CHECK(s.V * s.V_inv == IntMatrix::identity(m.cols()));
  const int64_t du = determinant(s.U), dv = determinant(s.V);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  for (int i = 0; i < s.D.rows(); ++i)
    for (int j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  for (int i = 0; i + 1 < s.rank; ++i) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
  for (int i = 0; i < s.rank; ++i) CHECK(s.D(i, i) == s.diagonal[i]);
}

}  // namespace

TEST_CASE("Smith form of small fixed matrices") {
  auto s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
  CHECK(s.diagonal == std::vector<int64_t>{1, 6});
  check_smith(IntMatrix::from_rows({{2, 0}, {0, 3}}));

  IntMatrix zero(3, 4);
  auto z = smith_normal_form(zero);
  CHECK(z.rank == 0);
  CHECK(z.U == IntMatrix::identity(3));
  CHECK(z.V == IntMatrix::identity(4));
  CHECK(z.D.is_zero());
}

TEST_CASE("Smith form of random matrices") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix m(6, 8);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 8; ++j) m(i, j) = entry(rng);
    check_smith(m);
  }
}

TEST_CASE("sparse and dense elementary divisors agree") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), coin(0, 3);
  for (int trial = 0; trial < 80; ++trial) {
    const int r = 2 + trial % 7, c = 3 + trial % 5;
    SparseMatrix sp(r, c);
    for (int j = 0; j < c; ++j)
      for (int i = 0; i < r; ++i)
        if (coin(rng) == 0) {
          const int v = entry(rng);
          if (v != 0) sp.columns[j].push_back({i, v});
        }
    const auto a = elementary_divisors(sp);
    const auto b = smith_normal_form(sp.to_dense());
    CHECK(a.rank == b.rank);
    std::vector<int64_t> nontrivial;
    for (auto d : b.diagonal)
      if (d > 1) nontrivial.push_back(d);
    CHECK(a.divisors == nontrivial);
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix::from_rows({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(IntMatrix::from_rows({{0, 1, 2}, {1, 0, 3}, {4, -3, 8}})) == -2);
  CHECK(determinant(IntMatrix::from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("Howell form over composite moduli") {
  // Span of (2) in Z_4 has two elements; (1) does not belong to it.
  HowellForm h({{2}}, 1, 4);
  CHECK(h.row_orders() == std::vector<int64_t>{2});
  CHECK(h.contains({2}));
  CHECK_FALSE(h.contains({1}));

  // Row (2,1) mod 4: 2*(2,1) = (0,2), so (0,2) is in the span. Gaussian
  // elimination that ignores the annihilator row would miss it.
  HowellForm g({{2, 1}}, 2, 4);
  CHECK(g.contains({0, 2}));
  CHECK_FALSE(g.contains({0, 1}));
  int64_t size = 1;
  for (auto o : g.row_orders()) size *= o;
  CHECK(size == 4);
}

TEST_CASE("Howell span size matches brute force") {
  std::mt19937 rng(99);
  for (int64_t m : {4, 6, 8, 9, 12}) {
    std::uniform_int_distribution<int64_t> entry(0, m - 1);
    for (int trial = 0; trial < 10; ++trial) {
      const int r = 2, c = 3;
      std::vector<ModVector> rows(r, ModVector(c));
      for (auto& row : rows)
        for (auto& e : row) e = entry(rng);
      HowellForm h(rows, c, m);
      // enumerate the span by brute force
      std::vector<char> in(m * m * m, 0);
      int64_t count = 0;
      for (int64_t a = 0; a < m; ++a)
        for (int64_t b = 0; b < m; ++b) {
          ModVector v(c);
          for (int j = 0; j < c; ++j) v[j] = (a * rows[0][j] + b * rows[1][j]) % m;
          const int64_t key = (v[0] * m + v[1]) * m + v[2];
          if (!in[key]) ++count;
          in[key] = 1;
        }
      int64_t size = 1;
      for (auto o : h.row_orders()) size *= o;
      CHECK(size == count);
      for (int64_t key = 0; key < m * m * m; ++key)
        CHECK(h.contains({key / (m * m), key / m % m, key % m}) == static_cast<bool>(in[key]));
    }
  }
}

TEST_CASE("left kernel mod m") {
  auto a = IntMatrix::from_rows({{1, 2}, {2, 4}, {0, 3}});
  for (int64_t m : {3, 4, 6}) {
    auto ker = left_kernel_mod(a, m);
    for (const auto& x : ker)
      for (int j = 0; j < 2; ++j) {
        int64_t s = 0;
        for (int i = 0; i < 3; ++i) s += x[i] * a(i, j);
        CHECK(s % m == 0);
      }
    // brute-force kernel size
    int64_t count = 0;
    for (int64_t p = 0; p < m; ++p)
      for (int64_t q = 0; q < m; ++q)
        for (int64_t r = 0; r < m; ++r)
          if ((p + 2 * q) % m == 0 && (2 * p + 4 * q + 3 * r) % m == 0) ++count;
    HowellForm span(ker, 3, m);
    int64_t size = 1;
    for (auto o : span.row_orders()) size *= o;
    CHECK(size == count);
  }
}

TEST_CASE("int64 Smith form either matches the exact one or reports overflow") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  int overflowed = 0;
  for (int k = 0; k < 60; ++k) {
    IntMatrix m(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) m(i, j) = entry(rng);
    const auto e = smith_normal_form_exact(m);
    CHECK(e.U * BigMatrix(m) * e.V == e.D);
    CHECK(abs(determinant(e.V)) == 1);
    try {
      const auto s = smith_normal_form(m);
      CHECK(BigMatrix(s.V) == e.V);
      CHECK(BigMatrix(s.D) == e.D);
    } catch (const OverflowError&) {
      ++overflowed;
      CHECK(std::max({e.U.max_abs(), e.V.max_abs(), e.U_inv.max_abs(), e.V_inv.max_abs()}) >
            BigInt(std::numeric_limits<int64_t>::max()));
    }
  }
  MESSAGE(overflowed << " of 60 dense 8x8 transforms exceed int64");
}
