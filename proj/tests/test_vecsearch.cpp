#include "doctest.h"

#include <random>

#include "mukailat/catalog.hpp"
#include "mukailat/numcond.hpp"
#include "mukailat/vecsearch.hpp"
#include "support.hpp"

using namespace mukailat;
using namespace mukailat::vecsearch;
using catalog::LatticeName;

namespace {

Lattice u_minus(long d) { return catalog::direct_sum(catalog::make(LatticeName::U), catalog::rank_one(-d)); }

Vector vec(std::initializer_list<long> xs) { return Vector(xs.begin(), xs.end()); }

std::vector<long> as_longs(const Vector& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

// Least (u, v) in the box, ordered on the concatenation.
std::optional<std::vector<long>> pair_oracle(const oracle::Mat& g, long n1, long n2, long p12, long bound) {
  const auto pts = oracle::box(g.size(), bound);
  std::optional<std::vector<long>> best;
  for (const auto& u : pts) {
    const auto uu = oracle::to_vec(u);
    if (oracle::pair(g, uu, uu) != n1) continue;
    for (const auto& v : pts) {
      const auto vv = oracle::to_vec(v);
      if (oracle::pair(g, vv, vv) != n2 || oracle::pair(g, uu, vv) != p12) continue;
      std::vector<long> cat = u;
      cat.insert(cat.end(), v.begin(), v.end());
      if (!best || oracle::canonical_less(cat, *best)) best = cat;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("vectors of given norm") {
  const auto roots = vectors_of_norm(catalog::make(LatticeName::MinusA2), -2, 1);
  CHECK(roots == std::vector<Vector>{vec({0, 1}), vec({0, -1}), vec({1, 0}), vec({1, 1}), vec({-1, 0}), vec({-1, -1})});
  CHECK(vectors_of_norm(catalog::make(LatticeName::U), 0, 1) ==
        std::vector<Vector>{vec({0, 1}), vec({0, -1}), vec({1, 0}), vec({-1, 0})});
  CHECK(vectors_of_norm(catalog::make(LatticeName::E8), -2, 3).empty());
  CHECK_THROWS_AS(vectors_of_norm(catalog::make(LatticeName::U), 0, 0), std::invalid_argument);
}

TEST_CASE("vectors of norm agree with box enumeration") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_symmetric(rng, 3, -3, 3);
    const Lattice l(test_support::from_mat(g));
    for (long n : {-4L, -2L, 0L, 2L, 5L}) {
      std::vector<std::vector<long>> want;
      for (const auto& p : oracle::box(3, 2)) {
        if (p == std::vector<long>{0, 0, 0}) continue;
        const auto v = oracle::to_vec(p);
        if (oracle::pair(g, v, v) == n) want.push_back(p);
      }
      std::sort(want.begin(), want.end(), oracle::canonical_less);
      const auto got = vectors_of_norm(l, n, 2);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(as_longs(got[i]) == want[i]);
    }
  }
}

TEST_CASE("hyperbolic pair examples") {
  CHECK(find_hyperbolic_pair(catalog::make(LatticeName::U), 1) == VectorPair{vec({0, 1}), vec({1, 0})});
  CHECK_FALSE(find_hyperbolic_pair(catalog::make(LatticeName::MinusA2), 5).has_value());
  CHECK(find_hyperbolic_pair(u_minus(14), 2) == VectorPair{vec({0, 1, 0}), vec({1, 0, 0})});
}

TEST_CASE("minus A2 pair examples") {
  const auto p = find_minus_a2_pair(u_minus(14), 3);
  REQUIRE(p.has_value());
  CHECK(*p == VectorPair{vec({1, -1, 0}), vec({2, 3, 1})});
  CHECK(find_minus_a2_pair(catalog::make(LatticeName::MinusA2), 1) == VectorPair{vec({0, 1}), vec({1, 0})});
  CHECK_FALSE(find_minus_a2_pair(catalog::make(LatticeName::E8), 2).has_value());
}

TEST_CASE("pair search agrees with brute force over the box") {
  std::mt19937_64 rng(42);
  const std::vector<std::array<long, 3>> targets{{0, 0, 1}, {-2, -2, 1}, {2, 2, -1}, {0, 2, 1}};
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = oracle::random_symmetric(rng, 3, -3, 3);
    const Lattice l(test_support::from_mat(g));
    for (const auto& t : targets) {
      const auto want = pair_oracle(g, t[0], t[1], t[2], 2);
      const auto got = find_pair(l, t[0], t[1], t[2], 2);
      REQUIRE(want.has_value() == got.has_value());
      if (got) {
        auto cat = as_longs(got->first);
        const auto second = as_longs(got->second);
        cat.insert(cat.end(), second.begin(), second.end());
        CHECK(cat == *want);
      }
    }
  }
}

TEST_CASE("admissible d: U + (-d) carries both U and -A2 within bound 3d") {
  for (long d = 1; d <= 100; ++d) {
    if (!numcond::satisfies_star(d) || !numcond::satisfies_starstar(d)) continue;
    const Lattice l = u_minus(d);
    const auto u = find_hyperbolic_pair(l, 3 * d);
    REQUIRE(u.has_value());
    const auto a = find_minus_a2_pair(l, 3 * d);
    REQUIRE(a.has_value());
    CHECK(l.norm(a->first) == -2);
    CHECK(l.norm(a->second) == -2);
    CHECK(l.pair(a->first, a->second) == 1);
    // The span has square-free discriminant 3, hence is primitive.
    const Sublattice s(l, IntMatrix::from_rows({a->first, a->second}));
    CHECK(saturate(s).index == 1);
  }
}

TEST_CASE("negative definite lattices carry no hyperbolic pair") {
  for (long d : {2L, 14L, 98L}) {
    const Lattice l = catalog::direct_sum(catalog::make(LatticeName::MinusA2), catalog::rank_one(-d));
    CHECK_FALSE(find_hyperbolic_pair(l, 1000000).has_value());
  }
}

TEST_CASE("pair complements") {
  const Lattice l = u_minus(14);
  CHECK(pair_complement(l, {vec({1, 0, 0}), vec({0, 1, 0})}).gram() == IntMatrix{{-14}});
  // Kernel of the pairing with (1,-1,0) and (2,3,1) is spanned by (14,14,5).
  CHECK(pair_complement(l, {vec({1, -1, 0}), vec({2, 3, 1})}).gram() == IntMatrix{{42}});
  const Lattice uu = catalog::direct_sum(catalog::make(LatticeName::U), catalog::make(LatticeName::U));
  CHECK(pair_complement(uu, {vec({1, 0, 0, 0}), vec({0, 1, 0, 0})}).gram() == IntMatrix{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(pair_complement(l, {vec({1, 0, 0}), vec({2, 0, 0})}), std::invalid_argument);
}

TEST_CASE("targets and requests") {
  CHECK(Target::parse("u-pair").kind == TargetKind::HyperbolicPair);
  CHECK(Target::parse("a2-pair").kind == TargetKind::MinusA2Pair);
  CHECK(Target::parse("isotropic").kind == TargetKind::Isotropic);
  const Target t = Target::parse("norm:-14");
  CHECK(t.kind == TargetKind::Norm);
  CHECK(t.n == -14);
  CHECK(t.name() == "norm:-14");
  CHECK_THROWS_AS(Target::parse("norm:x"), std::invalid_argument);
  CHECK_THROWS_AS(Target::parse("pair"), std::invalid_argument);

  const Lattice l = u_minus(14);
  const auto iso = run({l, 1, Target::parse("isotropic")});
  CHECK(iso.found);
  for (const auto& v : iso.vectors) CHECK(l.norm(v) == 0);
  // 2xy - 14z^2 never equals -3.
  const auto none = run({l, 1, Target::parse("norm:-3")});
  CHECK_FALSE(none.found);
  CHECK(run({l, 3, Target::parse("a2-pair")}).vectors == std::vector<Vector>{vec({1, -1, 0}), vec({2, 3, 1})});
  CHECK_THROWS_AS(run({l, 0, Target::parse("u-pair")}), std::invalid_argument);
}

TEST_CASE("large entries use exact arithmetic") {
  const Integer big("1000000000000000000");
  const Lattice l(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, big}});
  const auto p = find_hyperbolic_pair(l, 2);
  REQUIRE(p.has_value());
  CHECK(*p == VectorPair{vec({0, 1, 0}), vec({1, 0, 0})});
  const auto far = vectors_of_norm(l, big, 1);
  CHECK(far.size() == 10);  // z = +-1 and xy = 0
  for (const auto& v : far) CHECK(l.norm(v) == big);
  CHECK(l.norm(p->first) == 0);
  CHECK(l.norm(p->second) == 0);
  CHECK(l.pair(p->first, p->second) == 1);
}
