#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "mukailat/intmatrix.hpp"

namespace mukailat {

/// A free Z-module with a symmetric integer pairing, stored as a Gram matrix.
/// Degenerate Gram matrices are allowed here; operations that need a
/// nondegenerate lattice say so and throw.
class Lattice {
 public:
  Lattice() = default;
  explicit Lattice(IntMatrix gram);

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }

  /// Signed determinant of the Gram matrix.
  Integer discriminant() const { return det(gram_); }

  Integer pair(std::span<const Integer> u, std::span<const Integer> v) const;
  Integer norm(std::span<const Integer> v) const { return pair(v, v); }

  bool is_even() const;
  bool is_unimodular() const;
  bool is_nondegenerate() const { return sgn(discriminant()) != 0; }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  IntMatrix gram_;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// Inertia of the Gram matrix via congruence diagonalization over Q.
Signature signature(const Lattice& l);

bool is_positive_definite(const Lattice& l);
bool is_negative_definite(const Lattice& l);

/// Vectors given as rows in ambient coordinates. The rows must be linearly
/// independent; the constructor throws std::invalid_argument otherwise.
class Sublattice {
 public:
  Sublattice(Lattice ambient, IntMatrix basis);

  const Lattice& ambient() const { return ambient_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rows(); }

  /// basis * gram * basis^T
  IntMatrix induced_gram() const;
  Lattice induced() const { return Lattice(induced_gram()); }

 private:
  Lattice ambient_;
  IntMatrix basis_;
};

struct Saturation {
  IntMatrix basis;
  Integer index;
};

/// The saturation (Q-span of the basis intersected with the ambient lattice)
/// and the index of s inside it. An already-saturated basis is returned as is.
Saturation saturate(const Sublattice& s);

/// { v : v . b = 0 for every basis row b }. Requires a nondegenerate ambient.
Sublattice orth_complement(const Sublattice& s);

/// Checks |disc(s)| == |disc(s^perp)| for a primitive nondegenerate s in a
/// unimodular ambient. Throws std::invalid_argument when those preconditions
/// fail.
bool disc_duality_check(const Sublattice& s);

/// Invariant factors > 1 of L^dual / L.
struct DiscriminantGroup {
  std::vector<Integer> invariant_factors;

  Integer order() const;
};

/// Throws std::invalid_argument for degenerate lattices.
DiscriminantGroup discriminant_group(const Lattice& l);

/// True when the two row sets generate the same subgroup of Z^n.
bool same_span(const IntMatrix& a, const IntMatrix& b);

}  // namespace mukailat
