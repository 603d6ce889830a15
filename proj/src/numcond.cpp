#include "mukailat/numcond.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mukailat::numcond {

namespace {

void require_positive(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("discriminant label must be positive");
}

std::int64_t isqrt64(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool satisfies_star(std::int64_t d) {
  require_positive(d);
  return d > 6 && (d % 6 == 0 || d % 6 == 2);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  require_positive(n);
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool satisfies_starstar(std::int64_t d) {
  require_positive(d);
  if (d % 4 == 0 || d % 9 == 0) return false;
  for (auto [p, e] : factorize(d)) {
    if (p % 2 == 1 && p % 3 == 2) return false;
  }
  return true;
}

std::optional<A2Certificate> a2_certificate(std::int64_t d, std::int64_t bound) {
  require_positive(d);
  if (bound < 1) throw std::invalid_argument("a2_certificate: bound must be positive");
  // 2(x^2 - xy + y^2) = d  <=>  (2y - x)^2 + 3x^2 = 2d.
  if (d % 2 != 0) return std::nullopt;
  const std::int64_t target = 2 * d;
  const std::int64_t x_limit = std::min(bound, isqrt64(target / 3));
  for (std::int64_t ax = 0; ax <= x_limit; ++ax) {
    for (std::int64_t x : {ax, -ax}) {
      if (ax == 0 && x != 0) continue;
      const std::int64_t rest = target - 3 * x * x;
      const std::int64_t s = isqrt64(rest);
      if (s * s != rest || (s - x) % 2 != 0) continue;
      std::optional<std::int64_t> best;
      for (std::int64_t y : {(x + s) / 2, (x - s) / 2}) {
        if (y > bound || y < -bound || std::gcd(x, y) != 1) continue;
        const bool less = !best || std::abs(y) < std::abs(*best) ||
                          (std::abs(y) == std::abs(*best) && y > *best);
        if (less) best = y;
      }
      if (best) return A2Certificate{x, *best};
    }
  }
  return std::nullopt;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // These witnesses are deterministic below 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace mukailat::numcond
