#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mukailat {

using Integer = mpz_class;
using Vector = std::vector<Integer>;

inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Floor division (rounds toward negative infinity).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Floor of the square root of a nonnegative integer.
inline Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Residue in [0, m).
inline long mod_nonneg(const Integer& x, unsigned long m) {
  return static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), m));
}

inline bool fits_int64(const Integer& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

inline std::int64_t to_int64(const Integer& x) { return x.get_si(); }

inline std::string to_string(const Integer& x) { return x.get_str(); }

// Strict parse of an optionally signed decimal integer.
std::optional<Integer> parse_integer(const std::string& text);

// Canonical order on integers: 0 < 1 < -1 < 2 < -2 < ...
//
// Every "least" witness and every sorted vector list in this library uses
// this order coordinate-wise (lexicographic over coordinates). It makes the
// simplest witnesses, e.g. (1, 0) rather than (-1, 0), come first.
inline bool canonical_less(const Integer& a, const Integer& b) {
  const int c = cmpabs(a, b);
  if (c != 0) return c < 0;
  return sgn(a) > sgn(b);
}

inline bool canonical_less(std::span<const Integer> u, std::span<const Integer> v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (canonical_less(u[i], v[i])) return true;
    if (canonical_less(v[i], u[i])) return false;
  }
  return u.size() < v.size();
}

struct CanonicalLess {
  bool operator()(const Vector& u, const Vector& v) const { return canonical_less(u, v); }
};

// The sequence 0, 1, -1, 2, -2, ..., bound, -bound.
template <typename T>
std::vector<T> canonical_range(std::int64_t bound) {
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(2 * bound + 1));
  out.push_back(T(0));
  for (std::int64_t i = 1; i <= bound; ++i) {
    out.push_back(T(i));
    out.push_back(T(-i));
  }
  return out;
}

}  // namespace mukailat
