#include "doctest.h"

#include <random>
#include <set>

#include "mukailat/binqf.hpp"
#include "oracles.hpp"

using namespace mukailat;

namespace {

bool is_reduced(const BinaryQF& q) {
  if (abs(q.b) > q.a || q.a > q.c) return false;
  if ((abs(q.b) == q.a || q.a == q.c) && q.b < 0) return false;
  return true;
}

// q(p x + r y, s x + t y) for a unimodular substitution.
BinaryQF transform(const BinaryQF& q, long p, long r, long s, long t) {
  return {q(p, s), 2 * q.a * p * r + q.b * (p * t + r * s) + 2 * q.c * s * t, q(r, t)};
}

std::vector<std::pair<long, long>> as_pairs(const std::vector<Point2>& pts) {
  std::vector<std::pair<long, long>> out;
  for (const auto& p : pts) out.emplace_back(p.x.get_si(), p.y.get_si());
  return out;
}

}  // namespace

TEST_CASE("discriminant and definiteness examples") {
  CHECK(disc(BinaryQF{4, 1, 1}) == -15);
  CHECK(disc(BinaryQF{1, 0, 1}) == -4);
  CHECK(disc(BinaryQF{8, 6, 12}) == -348);
  CHECK(is_positive_definite(BinaryQF{4, 1, 1}));
  CHECK_FALSE(is_positive_definite(BinaryQF{1, 3, 0}));
  CHECK_FALSE(is_positive_definite(BinaryQF{0, 1, 0}));
  CHECK_FALSE(is_positive_definite(BinaryQF{-1, 0, -1}));
  CHECK(content(BinaryQF{6, 4, 2}) == 2);
  CHECK(is_primitive(BinaryQF{4, 1, 1}));
  CHECK_FALSE(is_primitive(BinaryQF{3, 3, 3}));
  CHECK(to_string(BinaryQF{4, 1, 1}) == "(4, 1, 1)");
}

TEST_CASE("reduce examples") {
  CHECK(reduce(BinaryQF{8, 6, 12}) == BinaryQF{8, 6, 12});
  CHECK(reduce(BinaryQF{3, 2, 2}) == BinaryQF{2, 2, 3});
  CHECK(reduce(BinaryQF{1, 0, 1}) == BinaryQF{1, 0, 1});
  CHECK(reduce(BinaryQF{2, -2, 3}) == BinaryQF{2, 2, 3});
  CHECK(reduce(BinaryQF{3, -2, 3}) == BinaryQF{3, 2, 3});
  CHECK_THROWS_AS(reduce(BinaryQF{1, 3, 0}), std::invalid_argument);
}

TEST_CASE("reduction is a complete class invariant") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> coef(-12, 12), pos(1, 25), sub(-4, 4);
  int tested = 0;
  while (tested < 400) {
    const BinaryQF q{pos(rng), coef(rng), pos(rng)};
    if (!is_positive_definite(q)) continue;
    ++tested;
    const BinaryQF r = reduce(q);
    CHECK(is_reduced(r));
    CHECK(disc(r) == disc(q));
    CHECK(reduce(r) == r);
    // Random unimodular substitution lands in the same reduced form.
    long p = sub(rng), s = sub(rng);
    if (oracle::gcd(p, s) != 1) continue;
    // Extend (p, s) to a matrix of determinant 1: p t - r s = 1.
    long r0 = 0, t0 = 0;
    for (long a = -8; a <= 8 && !(p * t0 - r0 * s == 1); ++a)
      for (long b = -8; b <= 8; ++b)
        if (p * b - a * s == 1) {
          r0 = a;
          t0 = b;
          break;
        }
    if (p * t0 - r0 * s != 1) continue;
    CHECK(reduce(transform(q, p, r0, s, t0)) == r);
  }
}

TEST_CASE("minimum examples and brute force") {
  CHECK(minimum(BinaryQF{8, 6, 12}) == 8);
  CHECK(minimum(BinaryQF{8, 2, 14}) == 8);
  CHECK(minimum(BinaryQF{1, 1, 1}) == 1);
  for (long a = 1; a <= 8; ++a)
    for (long b = -8; b <= 8; ++b)
      for (long c = 1; c <= 8; ++c) {
        const BinaryQF q{a, b, c};
        if (!is_positive_definite(q)) continue;
        CHECK(minimum(q) == oracle::form_minimum(a, b, c, 2 * std::max(a, c) + 2));
      }
}

TEST_CASE("represent examples") {
  CHECK(as_pairs(represent(BinaryQF{8, 6, 12}, 8)) == std::vector<std::pair<long, long>>{{1, 0}, {-1, 0}});
  // (2, 1) and (-2, -1) plus the two images under the automorph x -> -x - y.
  CHECK(as_pairs(represent(BinaryQF{4, 1, 1}, 19)) ==
        std::vector<std::pair<long, long>>{{2, 1}, {2, -3}, {-2, -1}, {-2, 3}});
  CHECK(represent(BinaryQF{1, 0, 1}, 3).empty());
  CHECK(as_pairs(represent(BinaryQF{1, 0, 1}, 0)) == std::vector<std::pair<long, long>>{{0, 0}});
  CHECK_THROWS_AS(represent(BinaryQF{1, 0, 1}, -1), std::invalid_argument);
  CHECK_THROWS_AS(represent(BinaryQF{1, 3, 0}, 4), std::invalid_argument);
}

TEST_CASE("represent agrees with box enumeration") {
  for (long a = 1; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      for (long c = 1; c <= 6; ++c) {
        if (b * b - 4 * a * c >= 0) continue;
        for (long n = 0; n <= 40; n += 1) {
          CHECK(as_pairs(represent(BinaryQF{a, b, c}, n)) == oracle::represent(a, b, c, n));
        }
      }
}

TEST_CASE("point enumeration covers exactly the sublevel set") {
  for (const BinaryQF q : {BinaryQF{4, 1, 1}, BinaryQF{8, 6, 12}, BinaryQF{1, 0, 1}, BinaryQF{3, -5, 7}}) {
    for (long limit : {0L, 5L, 37L}) {
      std::set<std::pair<long, long>> got;
      for_each_point_at_most(q, limit, std::nullopt, [&](const Integer& x, const Integer& y, const Integer& v) {
        CHECK(v == q(x, y));
        got.emplace(x.get_si(), y.get_si());
      });
      std::set<std::pair<long, long>> want;
      for (long x = -60; x <= 60; ++x)
        for (long y = -60; y <= 60; ++y)
          if (q(x, y) <= limit) want.emplace(x, y);
      CHECK(got == want);

      std::set<std::pair<long, long>> boxed;
      for_each_point_at_most(q, limit, Integer(1),
                             [&](const Integer& x, const Integer& y, const Integer&) { boxed.emplace(x.get_si(), y.get_si()); });
      std::set<std::pair<long, long>> want_boxed;
      for (const auto& p : want)
        if (std::abs(p.first) <= 1 && std::abs(p.second) <= 1) want_boxed.insert(p);
      CHECK(boxed == want_boxed);
    }
  }
}
