#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mukailat/lattice.hpp"

namespace mukailat::vecsearch {

// All searches scan the box [-bound, bound]^rank in canonical order
// (0 < 1 < -1 < 2 < ..., first coordinate slowest), so "least" and "sorted"
// below refer to that order. Absence is always relative to the bound.

enum class TargetKind { Isotropic, HyperbolicPair, MinusA2Pair, Norm };

struct Target {
  TargetKind kind = TargetKind::Norm;
  Integer n = 0;  // used by Norm only

  /// "isotropic", "u-pair", "a2-pair" or "norm:<n>".
  static Target parse(std::string_view text);
  std::string name() const;
};

struct SearchRequest {
  Lattice lattice;
  std::int64_t bound = 1;
  Target target;
};

struct VectorPair {
  Vector first;
  Vector second;

  friend bool operator==(const VectorPair&, const VectorPair&) = default;
};

/// Nonzero v in the box with v.v = n, sorted.
std::vector<Vector> vectors_of_norm(const Lattice& l, const Integer& n, std::int64_t bound);

/// Least (u, v) with u.u = n1, v.v = n2, u.v = p12: u is the least vector
/// admitting a partner, v its least partner. Definite lattices that cannot
/// carry the requested norms are refused without scanning.
std::optional<VectorPair> find_pair(const Lattice& l, const Integer& n1, const Integer& n2, const Integer& p12,
                                    std::int64_t bound);

/// u.u = v.v = 0, u.v = 1: a copy of U.
std::optional<VectorPair> find_hyperbolic_pair(const Lattice& l, std::int64_t bound);

/// u.u = v.v = -2, u.v = 1: a copy of -A2 (not necessarily primitive).
std::optional<VectorPair> find_minus_a2_pair(const Lattice& l, std::int64_t bound);

/// Gram of the orthogonal complement of span(pair) in l. Throws
/// std::invalid_argument if the pair is dependent or l is degenerate.
Lattice pair_complement(const Lattice& l, const VectorPair& pair);

struct SearchOutcome {
  bool found = false;
  std::vector<Vector> vectors;  // the pair, or every vector of the norm
};

/// Throws std::invalid_argument when bound < 1.
SearchOutcome run(const SearchRequest& request);

}  // namespace mukailat::vecsearch
