#include "doctest.h"

#include <algorithm>

#include "mukailat/catalog.hpp"
#include "support.hpp"

using namespace mukailat;
using catalog::LatticeName;

TEST_CASE("named lattices") {
  const Lattice u = catalog::make(LatticeName::U);
  CHECK(u.rank() == 2);
  CHECK(u.discriminant() == -1);
  CHECK(signature(u) == Signature{1, 1, 0});

  const Lattice m = catalog::make(LatticeName::MinusA2);
  CHECK(m.discriminant() == 3);
  CHECK(signature(m) == Signature{0, 2, 0});
  CHECK(m == catalog::rescale(catalog::make(LatticeName::A2), -1));

  const Lattice e8 = catalog::make(LatticeName::E8);
  CHECK(e8.rank() == 8);
  CHECK(e8.discriminant() == 1);
  CHECK(e8.is_even());
  CHECK(is_positive_definite(e8));

  const Lattice mukai = catalog::make(LatticeName::Mukai);
  CHECK(mukai.rank() == 24);
  CHECK(mukai.discriminant() == 1);
  CHECK(mukai.is_even());
  CHECK(signature(mukai) == Signature{20, 4, 0});
}

TEST_CASE("E8 Gram is a Cartan matrix of an E8 Dynkin diagram") {
  const IntMatrix g = catalog::make(LatticeName::E8).gram();
  // Off-diagonal entries are 0 or -1 and the -1 entries form a tree with
  // branch lengths 1, 2, 4 from a single trivalent node.
  std::vector<std::vector<std::size_t>> adj(8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(g(i, i) == 2);
    for (std::size_t j = 0; j < 8; ++j) {
      if (i == j) continue;
      CHECK((g(i, j) == 0 || g(i, j) == -1));
      if (g(i, j) == -1) adj[i].push_back(j);
    }
  }
  std::size_t edges = 0, branch = 8;
  for (std::size_t i = 0; i < 8; ++i) {
    edges += adj[i].size();
    if (adj[i].size() == 3) branch = i;
  }
  CHECK(edges == 14);
  REQUIRE(branch < 8);
  std::vector<std::size_t> arms;
  for (std::size_t start : adj[branch]) {
    std::size_t prev = branch, cur = start, len = 1;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  CHECK(arms == std::vector<std::size_t>{1, 2, 4});
}

TEST_CASE("direct sums and rescaling") {
  const Lattice u = catalog::make(LatticeName::U);
  const Lattice l = catalog::direct_sum(u, catalog::rank_one(-14));
  CHECK(l.gram() == IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -14}});
  CHECK(l.discriminant() == 14);
  CHECK(signature(catalog::direct_sum(u, u)) == Signature{2, 2, 0});
  CHECK(catalog::direct_sum(Lattice(IntMatrix(0, 0)), u) == u);
  CHECK(catalog::direct_sum(u, Lattice(IntMatrix(0, 0))) == u);
  CHECK(catalog::rescale(catalog::rank_one(1), -14) == catalog::rank_one(-14));
  CHECK(catalog::rescale(u, 2).discriminant() == -4);
}

TEST_CASE("determinant of a direct sum is the product") {
  const Lattice a = catalog::make(LatticeName::A2);
  const Lattice u = catalog::make(LatticeName::U);
  const Lattice s = catalog::direct_sum(catalog::direct_sum(a, u), catalog::rank_one(5));
  CHECK(s.discriminant() == a.discriminant() * u.discriminant() * 5);
  CHECK(s.discriminant() == oracle::leibniz_det(test_support::to_mat(s.gram())));
}

TEST_CASE("names") {
  for (auto n : {LatticeName::U, LatticeName::A2, LatticeName::MinusA2, LatticeName::E8, LatticeName::Mukai}) {
    CHECK(catalog::parse_name(catalog::to_string(n)) == n);
  }
  CHECK_THROWS_AS(catalog::parse_name("D4"), std::invalid_argument);
}
