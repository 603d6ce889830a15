#pragma once

#include "mukailat/integer.hpp"

namespace mukailat {

/// a + b*w in Z[w], w = exp(2 pi i / 3), so w^2 = -1 - w and conj(w) = -1 - w.
struct EisensteinInt {
  Integer a = 0;
  Integer b = 0;

  friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

inline EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
  return {x.a + y.a, x.b + y.b};
}

inline EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
  return {x.a - y.a, x.b - y.b};
}

inline EisensteinInt operator-(const EisensteinInt& x) { return {-x.a, -x.b}; }

inline EisensteinInt mul(const EisensteinInt& x, const EisensteinInt& y) {
  // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2
  const Integer bd = x.b * y.b;
  return {x.a * y.a - bd, x.a * y.b + x.b * y.a - bd};
}

inline EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) { return mul(x, y); }

inline EisensteinInt conj(const EisensteinInt& x) { return {x.a - x.b, -x.b}; }

/// |x|^2 = a^2 - ab + b^2
inline Integer norm(const EisensteinInt& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

/// 2 Re(x * conj(y)); on the basis {1, w} this is the A2 Gram matrix.
inline Integer pairing(const EisensteinInt& x, const EisensteinInt& y) {
  return 2 * x.a * y.a + 2 * x.b * y.b - x.a * y.b - x.b * y.a;
}

/// sqrt(-3) = 1 + 2w. Since w = 1 modulo sqrt(-3), a + bw = a + b there.
inline bool divisible_by_sqrt_minus3(const EisensteinInt& x) { return mod_nonneg(x.a + x.b, 3) == 0; }

inline const EisensteinInt kSqrtMinus3{1, 2};

}  // namespace mukailat
