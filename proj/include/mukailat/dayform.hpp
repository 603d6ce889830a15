#pragma once

#include <optional>

#include "mukailat/binqf.hpp"
#include "mukailat/eisenstein.hpp"
#include "mukailat/intmatrix.hpp"

namespace mukailat::dayform {

/// Euler pairings of a rank-4 configuration <l1, l2, k1, k2> where <l1, l2>
/// is -A2 and <k1, k2> is U: k = l1.k1, l = l2.k1, m = l1.k2, n = l2.k2.
struct DayInstance {
  Integer k = 0;
  Integer l = 0;
  Integer m = 0;
  Integer n = 0;

  EisensteinInt alpha() const { return {k, -l}; }  // k - l w
  EisensteinInt gamma() const { return {m, -n}; }  // m - n w
};

struct DayCoefficients {
  Integer A;
  Integer B;
  Integer C;
  Integer h;  // gcd(|A|, |B|, |C|) > 0
  BinaryQF q; // (A, B, C) / h
};

/// [[-2,1,k,m],[1,-2,l,n],[k,l,0,1],[m,n,1,0]]
IntMatrix day_gram(const DayInstance& inst);

/// A, B, C as the 3x3 minors of the Gram matrix (B carries its factor 2).
/// Throws std::domain_error if A = B = C = 0.
DayCoefficients day_coeffs(const DayInstance& inst);

/// A = 2|alpha|^2, B = 4 Re(alpha conj(gamma)) + 6, C = 2|gamma|^2.
bool eisenstein_identity_check(const DayInstance& inst);

/// h is even and satisfies the associated-K3 divisibility condition.
bool hcf_lemma_check(const DayInstance& inst);

/// disc <l1, l2, x k1 + y k2> as a 3x3 determinant; 0 at (0, 0).
Integer q_of_xy(const DayInstance& inst, const Integer& x, const Integer& y);

/// Subset of {0, 1, 2} as a bitmask: bit r set iff r is a value mod 3.
class ResidueSet {
 public:
  constexpr ResidueSet() = default;
  constexpr explicit ResidueSet(unsigned bits) : bits_(bits & 7u) {}

  constexpr bool contains(int r) const { return (bits_ >> r) & 1u; }
  constexpr void insert(int r) { bits_ |= 1u << r; }
  constexpr unsigned bits() const { return bits_; }

  friend constexpr bool operator==(ResidueSet, ResidueSet) = default;

 private:
  unsigned bits_ = 0;
};

/// { q(x, y) mod 3 : x, y in {0, 1, 2} }. Requires 3 | disc(q).
ResidueSet classify_mod3(const BinaryQF& q);

struct PrimeWitness {
  Integer p;
  Integer x;
  Integer y;

  friend bool operator==(const PrimeWitness&, const PrimeWitness&) = default;
};

/// Smallest prime p = 1 (mod 3) with q(x, y) = p for some |x|, |y| <= bound;
/// the witness is the canonical-least (x, y) for that p. nullopt means "none
/// within bound", never "none at all". Requires q primitive and positive
/// definite (std::invalid_argument otherwise).
std::optional<PrimeWitness> find_prime_1mod3(const BinaryQF& q, const Integer& bound);

}  // namespace mukailat::dayform
