#pragma once

#include <string>
#include <string_view>

#include "mukailat/lattice.hpp"

namespace mukailat::catalog {

enum class LatticeName { U, A2, MinusA2, E8, Mukai };

/// U      = [[0,1],[1,0]]
/// A2     = [[2,-1],[-1,2]],  MinusA2 = -A2
/// E8     = Cartan matrix of E8 in Bourbaki numbering (simple roots 1..8,
///          chain 1-3-4-5-6-7-8 with root 2 attached to root 4):
///
///            [ 2  0 -1  0  0  0  0  0]
///            [ 0  2  0 -1  0  0  0  0]
///            [-1  0  2 -1  0  0  0  0]
///            [ 0 -1 -1  2 -1  0  0  0]
///            [ 0  0  0 -1  2 -1  0  0]
///            [ 0  0  0  0 -1  2 -1  0]
///            [ 0  0  0  0  0 -1  2 -1]
///            [ 0  0  0  0  0  0 -1  2]
///
/// Mukai  = U + U + U + U + E8 + E8 (rank 24, in that block order)
Lattice make(LatticeName name);

/// Throws std::invalid_argument for names outside the catalog. Accepts the
/// enumerator spellings ("U", "A2", "MinusA2", "E8", "Mukai").
LatticeName parse_name(std::string_view name);
std::string to_string(LatticeName name);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice rescale(const Lattice& l, const Integer& t);

/// The rank-1 lattice (t).
Lattice rank_one(const Integer& t);

}  // namespace mukailat::catalog
