#include "mukailat/catalog.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace mukailat::catalog {

namespace {

Lattice e8() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  constexpr std::array<std::pair<std::size_t, std::size_t>, 7> edges{
      {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}};
  for (auto [i, j] : edges) {
    g(i, j) = -1;
    g(j, i) = -1;
  }
  return Lattice(std::move(g));
}

}  // namespace

Lattice make(LatticeName name) {
  switch (name) {
    case LatticeName::U:
      return Lattice(IntMatrix{{0, 1}, {1, 0}});
    case LatticeName::A2:
      return Lattice(IntMatrix{{2, -1}, {-1, 2}});
    case LatticeName::MinusA2:
      return Lattice(IntMatrix{{-2, 1}, {1, -2}});
    case LatticeName::E8:
      return e8();
    case LatticeName::Mukai: {
      const Lattice u = make(LatticeName::U);
      const Lattice e = e8();
      Lattice out;
      for (int i = 0; i < 4; ++i) out = direct_sum(out, u);
      return direct_sum(direct_sum(out, e), e);
    }
  }
  throw std::invalid_argument("unknown lattice name");
}

LatticeName parse_name(std::string_view name) {
  if (name == "U") return LatticeName::U;
  if (name == "A2") return LatticeName::A2;
  if (name == "MinusA2") return LatticeName::MinusA2;
  if (name == "E8") return LatticeName::E8;
  if (name == "Mukai") return LatticeName::Mukai;
  throw std::invalid_argument("unknown lattice name: " + std::string(name));
}

std::string to_string(LatticeName name) {
  switch (name) {
    case LatticeName::U: return "U";
    case LatticeName::A2: return "A2";
    case LatticeName::MinusA2: return "MinusA2";
    case LatticeName::E8: return "E8";
    case LatticeName::Mukai: return "Mukai";
  }
  return "?";
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  const std::size_t n = a.rank();
  const std::size_t m = b.rank();
  IntMatrix g(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = a.gram()(i, j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g(n + i, n + j) = b.gram()(i, j);
  }
  return Lattice(std::move(g));
}

Lattice rescale(const Lattice& l, const Integer& t) { return Lattice(t * l.gram()); }

Lattice rank_one(const Integer& t) { return Lattice(IntMatrix{{t}}); }

}  // namespace mukailat::catalog
