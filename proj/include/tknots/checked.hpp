#pragma once

#include <cstdint>
#include <numeric>

#include "tknots/errors.hpp"

namespace tknots::checked {

inline int64_t add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline int64_t sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline int64_t mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

inline int64_t neg(int64_t a) { return sub(0, a); }

/// a + k*b
inline int64_t axpy(int64_t a, int64_t k, int64_t b) { return add(a, mul(k, b)); }

/// Floor division, exact for negative operands.
inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Residue in [0, m).
inline int64_t mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

struct Xgcd {
  int64_t g, s, t;  // g = s*a + t*b, g >= 0
};

inline Xgcd xgcd(int64_t a, int64_t b) {
  int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    int64_t q = old_r / r;
    int64_t tmp = sub(old_r, mul(q, r));
    old_r = r;
    r = tmp;
    tmp = sub(old_s, mul(q, s));
    old_s = s;
    s = tmp;
    tmp = sub(old_t, mul(q, t));
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {neg(old_r), neg(old_s), neg(old_t)};
  return {old_r, old_s, old_t};
}

/// Inverse of a modulo m, or 0 when a is not a unit (m >= 2).
inline int64_t inverse_mod(int64_t a, int64_t m) {
  auto [g, s, t] = xgcd(mod(a, m), m);
  (void)t;
  if (g != 1) return 0;
  return mod(s, m);
}

}  // namespace tknots::checked
