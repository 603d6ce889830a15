#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace mukailat::numcond {

/// d > 6 and d = 0 or 2 (mod 6).
bool satisfies_star(std::int64_t d);

/// d is divisible by none of 4, 9, or an odd prime p = 2 (mod 3).
bool satisfies_starstar(std::int64_t d);

struct A2Certificate {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const A2Certificate&, const A2Certificate&) = default;
};

/// A coprime (x, y) with |x|, |y| <= bound and 2x^2 - 2xy + 2y^2 = d, least in
/// canonical order (0 < 1 < -1 < 2 < ...; x first, then y). The norm form is
/// positive definite, so bound >= d decides existence outright.
std::optional<A2Certificate> a2_certificate(std::int64_t d, std::int64_t bound);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace mukailat::numcond
