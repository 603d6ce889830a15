#include "mukailat/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace mukailat {

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw std::invalid_argument("Lattice: Gram matrix is not square");
  if (!gram_.is_symmetric()) throw std::invalid_argument("Lattice: Gram matrix is not symmetric");
}

Integer Lattice::pair(std::span<const Integer> u, std::span<const Integer> v) const {
  if (u.size() != rank() || v.size() != rank()) {
    throw std::invalid_argument("Lattice::pair: vector length differs from rank");
  }
  Integer total = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(u[i]) == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < rank(); ++j) row += gram_(i, j) * v[j];
    total += u[i] * row;
  }
  return total;
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    if (mod_nonneg(gram_(i, i), 2) != 0) return false;
  }
  return true;
}

bool Lattice::is_unimodular() const { return abs(discriminant()) == 1; }

Signature signature(const Lattice& l) {
  const std::size_t n = l.rank();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = l.gram()(i, j);
  }

  Signature sig;
  std::size_t k = 0;
  while (k < n) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (sgn(a[i][i]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) {
      // Zero diagonal: e_i + e_j has norm 2 a_ij, so fold j into i.
      std::size_t oi = n, oj = n;
      for (std::size_t i = k; i < n && oi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (sgn(a[i][j]) != 0) {
            oi = i;
            oj = j;
            break;
          }
        }
      }
      if (oi == n) {
        sig.zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a[oi][c] += a[oj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][oi] += a[r][oj];
      pivot = oi;
    }
    std::swap(a[k], a[pivot]);
    for (auto& row : a) std::swap(row[k], row[pivot]);

    const mpq_class d = a[k][k];
    (sgn(d) > 0 ? sig.positive : sig.negative) += 1;
    // Schur complement on the trailing block.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a[i][k]) == 0) continue;
      const mpq_class f = a[i][k] / d;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    ++k;
  }
  return sig;
}

bool is_positive_definite(const Lattice& l) { return signature(l).positive == l.rank(); }
bool is_negative_definite(const Lattice& l) { return signature(l).negative == l.rank(); }

Sublattice::Sublattice(Lattice ambient, IntMatrix basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.rows() > 0 && basis_.cols() != ambient_.rank()) {
    throw std::invalid_argument("Sublattice: basis vectors do not match the ambient rank");
  }
  if (basis_.rows() == 0) basis_ = IntMatrix(0, ambient_.rank());
  if (mukailat::rank(basis_) != basis_.rows()) {
    throw std::invalid_argument("Sublattice: basis rows are linearly dependent");
  }
}

IntMatrix Sublattice::induced_gram() const {
  return basis_ * ambient_.gram() * basis_.transpose();
}

Saturation saturate(const Sublattice& s) {
  Integer index = 1;
  for (const auto& d : snf(s.basis())) index *= d;
  if (index == 1) return {s.basis(), index};
  // Kernel of the kernel is the saturation.
  IntMatrix saturated = integer_kernel(integer_kernel(s.basis()));
  return {saturated, index};
}

Sublattice orth_complement(const Sublattice& s) {
  if (!s.ambient().is_nondegenerate()) {
    throw std::invalid_argument("orth_complement: ambient lattice is degenerate");
  }
  return Sublattice(s.ambient(), integer_kernel(s.basis() * s.ambient().gram()));
}

bool disc_duality_check(const Sublattice& s) {
  if (!s.ambient().is_unimodular()) {
    throw std::invalid_argument("disc_duality_check: ambient lattice is not unimodular");
  }
  if (saturate(s).index != 1) {
    throw std::invalid_argument("disc_duality_check: sublattice is not primitive");
  }
  const Integer disc_s = det(s.induced_gram());
  if (sgn(disc_s) == 0) {
    throw std::invalid_argument("disc_duality_check: sublattice is degenerate");
  }
  const Integer disc_perp = det(orth_complement(s).induced_gram());
  return abs(disc_s) == abs(disc_perp);
}

Integer DiscriminantGroup::order() const {
  Integer n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  if (!l.is_nondegenerate()) {
    throw std::invalid_argument("discriminant_group: lattice is degenerate");
  }
  DiscriminantGroup g;
  for (auto& d : snf(l.gram())) {
    if (d > 1) g.invariant_factors.push_back(d);
  }
  return g;
}

bool same_span(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  return hnf(a) == hnf(b);
}

}  // namespace mukailat
