#include "mukailat/dayform.hpp"

#include <stdexcept>

#include "mukailat/numcond.hpp"

namespace mukailat::dayform {

namespace {

bool is_prime(const Integer& n) {
  if (sgn(n) <= 0) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return numcond::is_prime(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

}  // namespace

IntMatrix day_gram(const DayInstance& inst) {
  const auto& [k, l, m, n] = inst;
  return IntMatrix{{-2, 1, k, m}, {1, -2, l, n}, {k, l, 0, 1}, {m, n, 1, 0}};
}

DayCoefficients day_coeffs(const DayInstance& inst) {
  const auto& [k, l, m, n] = inst;
  DayCoefficients out;
  out.A = det(IntMatrix{{-2, 1, k}, {1, -2, l}, {k, l, 0}});
  out.B = 2 * det(IntMatrix{{-2, 1, m}, {1, -2, n}, {k, l, 1}});
  out.C = det(IntMatrix{{-2, 1, m}, {1, -2, n}, {m, n, 0}});
  out.h = gcd(gcd(out.A, out.B), out.C);
  if (sgn(out.h) == 0) throw std::domain_error("day_coeffs: A = B = C = 0");
  out.q = BinaryQF{out.A / out.h, out.B / out.h, out.C / out.h};
  return out;
}

bool eisenstein_identity_check(const DayInstance& inst) {
  const auto coeffs = day_coeffs(inst);
  const EisensteinInt alpha = inst.alpha();
  const EisensteinInt gamma = inst.gamma();
  return coeffs.A == 2 * norm(alpha) && coeffs.B == 2 * pairing(alpha, gamma) + 6 &&
         coeffs.C == 2 * norm(gamma);
}

bool hcf_lemma_check(const DayInstance& inst) {
  const Integer h = day_coeffs(inst).h;
  if (mod_nonneg(h, 2) != 0) return false;
  if (!fits_int64(h)) throw std::overflow_error("hcf_lemma_check: h exceeds 64 bits");
  return numcond::satisfies_starstar(to_int64(h));
}

Integer q_of_xy(const DayInstance& inst, const Integer& x, const Integer& y) {
  const auto& [k, l, m, n] = inst;
  const Integer p = k * x + m * y;
  const Integer r = l * x + n * y;
  return det(IntMatrix{{-2, 1, p}, {1, -2, r}, {p, r, 2 * x * y}});
}

ResidueSet classify_mod3(const BinaryQF& q) {
  if (mod_nonneg(disc(q), 3) != 0) throw std::invalid_argument("classify_mod3: 3 does not divide disc(q)");
  ResidueSet out;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) out.insert(static_cast<int>(mod_nonneg(q(x, y), 3)));
  }
  return out;
}

std::optional<PrimeWitness> find_prime_1mod3(const BinaryQF& q, const Integer& bound) {
  if (!is_positive_definite(q)) throw std::invalid_argument("find_prime_1mod3: form is not positive definite");
  if (!is_primitive(q)) throw std::invalid_argument("find_prime_1mod3: form is not primitive");
  if (sgn(bound) < 0) throw std::invalid_argument("find_prime_1mod3: bound must be nonnegative");

  // Every value in the box is at most (a + |b| + c) bound^2.
  const Integer ceiling = (q.a + abs(q.b) + q.c) * bound * bound;
  Integer limit = 64;
  while (true) {
    std::optional<PrimeWitness> best;
    for_each_point_at_most(q, limit, bound, [&](const Integer& x, const Integer& y, const Integer& v) {
      if (best && v > best->p) return;
      if (best && v == best->p) {
        if (canonical_less(Point2{x, y}, Point2{best->x, best->y})) best = PrimeWitness{v, x, y};
        return;
      }
      if (mod_nonneg(v, 3) == 1 && is_prime(v)) best = PrimeWitness{v, x, y};
    });
    if (best) return best;
    if (limit >= ceiling) return std::nullopt;
    limit *= 4;
  }
}

}  // namespace mukailat::dayform
