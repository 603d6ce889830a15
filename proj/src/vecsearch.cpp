#include "mukailat/vecsearch.hpp"

#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "mukailat/integer.hpp"

namespace mukailat::vecsearch {

namespace {

// Scalar helpers so the box engine runs on int64 when nothing can overflow
// and on GMP integers otherwise.
inline bool is_zero(std::int64_t x) { return x == 0; }
inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool divides(std::int64_t d, std::int64_t a) { return a % d == 0; }
inline bool divides(const Integer& d, const Integer& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }
inline std::int64_t quotient(std::int64_t a, std::int64_t d) { return a / d; }
inline Integer quotient(const Integer& a, const Integer& d) { return a / d; }
inline bool within(std::int64_t x, std::int64_t bound) { return x >= -bound && x <= bound; }
inline bool within(const Integer& x, std::int64_t bound) { return cmpabs(x, Integer(bound)) <= 0; }
inline std::int64_t from_integer(const Integer& x, std::int64_t) { return to_int64(x); }
inline Integer from_integer(const Integer& x, const Integer&) { return x; }
inline Integer to_integer(std::int64_t x) { return Integer(x); }
inline Integer to_integer(const Integer& x) { return x; }

inline bool scalar_less(std::int64_t a, std::int64_t b) {
  const std::int64_t aa = a < 0 ? -a : a;
  const std::int64_t ab = b < 0 ? -b : b;
  if (aa != ab) return aa < ab;
  return a > b;
}
inline bool scalar_less(const Integer& a, const Integer& b) { return canonical_less(a, b); }

template <typename T>
bool vector_less(const std::vector<T>& u, const std::vector<T>& v) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (scalar_less(u[i], v[i])) return true;
    if (scalar_less(v[i], u[i])) return false;
  }
  return false;
}

template <typename T>
class BoxEngine {
 public:
  BoxEngine(const Lattice& l, std::int64_t bound)
      : n_(l.rank()), bound_(bound), gram_(n_ * n_), range_(canonical_range<T>(bound)) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) gram_[i * n_ + j] = from_integer(l.gram()(i, j), T{});
    }
  }

  std::size_t rank() const { return n_; }

  T norm(const std::vector<T>& v) const {
    T total = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (is_zero(v[i])) continue;
      T row = 0;
      for (std::size_t j = 0; j < n_; ++j) row += gram_[i * n_ + j] * v[j];
      total += v[i] * row;
    }
    return total;
  }

  std::vector<T> gram_times(const std::vector<T>& v) const {
    std::vector<T> w(n_, T(0));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) w[i] += gram_[i * n_ + j] * v[j];
    }
    return w;
  }

  // Visits every vector whose coordinates outside `skip` range over the box in
  // canonical order; coordinate `skip` (if < rank) is left at zero. Stops when
  // `visit` returns true.
  template <typename F>
  void for_each(std::size_t skip, F&& visit) const {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i != skip) free.push_back(i);
    }
    std::vector<std::size_t> idx(n_, 0);
    std::vector<T> v(n_, T(0));
    const std::size_t last = range_.size() - 1;
    if (visit(v)) return;
    while (true) {
      std::size_t k = free.size();
      bool advanced = false;
      while (k > 0) {
        const std::size_t pos = free[--k];
        if (idx[pos] < last) {
          v[pos] = range_[++idx[pos]];
          advanced = true;
          break;
        }
        idx[pos] = 0;
        v[pos] = range_[0];
      }
      if (!advanced || visit(v)) return;
    }
  }

  std::int64_t bound() const { return bound_; }

 private:
  std::size_t n_;
  std::int64_t bound_;
  std::vector<T> gram_;
  std::vector<T> range_;
};

bool all_zero(const auto& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

template <typename T>
Vector to_vector(const std::vector<T>& v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_integer(x));
  return out;
}

// Largest |entry| * rank^2 * bound^2 must stay clear of int64 overflow.
bool fits_fast_path(const Lattice& l, std::int64_t bound, std::initializer_list<const Integer*> targets) {
  Integer max_entry = 1;
  for (const auto& x : l.gram().entries()) {
    if (cmpabs(x, max_entry) > 0) max_entry = abs(x);
  }
  const Integer n = static_cast<long>(l.rank());
  const Integer b = bound;
  const Integer worst = max_entry * n * n * (b + 1) * (b + 1);
  const Integer limit = Integer(1) << 61;
  if (worst >= limit) return false;
  for (const Integer* t : targets) {
    if (cmpabs(*t, limit) >= 0) return false;
  }
  return true;
}

template <typename T>
std::vector<Vector> vectors_of_norm_impl(const Lattice& l, const Integer& target, std::int64_t bound) {
  BoxEngine<T> engine(l, bound);
  const T n = from_integer(target, T{});
  std::vector<Vector> out;
  engine.for_each(engine.rank(), [&](const std::vector<T>& v) {
    if (!all_zero(v) && engine.norm(v) == n) out.push_back(to_vector(v));
    return false;
  });
  return out;
}

template <typename T>
std::optional<VectorPair> find_pair_impl(const Lattice& l, const Integer& n1_, const Integer& n2_,
                                         const Integer& p12_, std::int64_t bound) {
  BoxEngine<T> engine(l, bound);
  const std::size_t n = engine.rank();
  const T n1 = from_integer(n1_, T{});
  const T n2 = from_integer(n2_, T{});
  const T p12 = from_integer(p12_, T{});
  std::optional<VectorPair> result;

  engine.for_each(n, [&](const std::vector<T>& u) {
    if (all_zero(u) || engine.norm(u) != n1) return false;
    const std::vector<T> w = engine.gram_times(u);
    std::size_t solve = n;
    for (std::size_t i = n; i > 0; --i) {
      if (!is_zero(w[i - 1])) {
        solve = i - 1;
        break;
      }
    }
    if (solve == n && !is_zero(p12)) return false;

    std::optional<std::vector<T>> best;
    engine.for_each(solve, [&](const std::vector<T>& partial) {
      std::vector<T> v = partial;
      if (solve < n) {
        T rest = p12;
        for (std::size_t i = 0; i < n; ++i) {
          if (i != solve) rest -= w[i] * v[i];
        }
        if (!divides(w[solve], rest)) return false;
        T coord = quotient(rest, w[solve]);
        if (!within(coord, bound)) return false;
        v[solve] = coord;
      }
      if (all_zero(v) || engine.norm(v) != n2) return false;
      if (!best || vector_less(v, *best)) best = v;
      return false;
    });
    if (!best) return false;
    result = VectorPair{to_vector(u), to_vector(*best)};
    return true;
  });
  return result;
}

bool definiteness_rules_out(const Lattice& l, std::initializer_list<const Integer*> norms) {
  if (l.rank() == 0) return true;
  const Signature sig = signature(l);
  if (sig.positive == l.rank()) {
    for (const Integer* x : norms) {
      if (sgn(*x) <= 0) return true;
    }
  }
  if (sig.negative == l.rank()) {
    for (const Integer* x : norms) {
      if (sgn(*x) >= 0) return true;
    }
  }
  return false;
}

void require_bound(std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("search bound must be at least 1");
}

}  // namespace

Target Target::parse(std::string_view text) {
  if (text == "isotropic") return {TargetKind::Isotropic, 0};
  if (text == "u-pair") return {TargetKind::HyperbolicPair, 0};
  if (text == "a2-pair") return {TargetKind::MinusA2Pair, 0};
  if (text.starts_with("norm:")) {
    if (auto n = parse_integer(std::string(text.substr(5)))) return {TargetKind::Norm, *n};
  }
  throw std::invalid_argument("unknown search target: " + std::string(text));
}

std::string Target::name() const {
  switch (kind) {
    case TargetKind::Isotropic: return "isotropic";
    case TargetKind::HyperbolicPair: return "u-pair";
    case TargetKind::MinusA2Pair: return "a2-pair";
    case TargetKind::Norm: return "norm:" + n.get_str();
  }
  return "?";
}

std::vector<Vector> vectors_of_norm(const Lattice& l, const Integer& n, std::int64_t bound) {
  require_bound(bound);
  if (definiteness_rules_out(l, {&n})) return {};
  if (fits_fast_path(l, bound, {&n})) return vectors_of_norm_impl<std::int64_t>(l, n, bound);
  return vectors_of_norm_impl<Integer>(l, n, bound);
}

std::optional<VectorPair> find_pair(const Lattice& l, const Integer& n1, const Integer& n2, const Integer& p12,
                                    std::int64_t bound) {
  require_bound(bound);
  if (definiteness_rules_out(l, {&n1, &n2})) return std::nullopt;
  auto found = fits_fast_path(l, bound, {&n1, &n2, &p12}) ? find_pair_impl<std::int64_t>(l, n1, n2, p12, bound)
                                                          : find_pair_impl<Integer>(l, n1, n2, p12, bound);
  if (found) {
    if (l.norm(found->first) != n1 || l.norm(found->second) != n2 || l.pair(found->first, found->second) != p12) {
      throw std::logic_error("find_pair: witness failed re-verification");
    }
  }
  return found;
}

std::optional<VectorPair> find_hyperbolic_pair(const Lattice& l, std::int64_t bound) {
  return find_pair(l, 0, 0, 1, bound);
}

std::optional<VectorPair> find_minus_a2_pair(const Lattice& l, std::int64_t bound) {
  return find_pair(l, -2, -2, 1, bound);
}

Lattice pair_complement(const Lattice& l, const VectorPair& pair) {
  const Sublattice span(l, IntMatrix::from_rows({pair.first, pair.second}));
  return orth_complement(span).induced();
}

SearchOutcome run(const SearchRequest& request) {
  require_bound(request.bound);
  const Lattice& l = request.lattice;
  SearchOutcome out;
  std::optional<VectorPair> pair;
  switch (request.target.kind) {
    case TargetKind::Isotropic:
      out.vectors = vectors_of_norm(l, 0, request.bound);
      break;
    case TargetKind::Norm:
      out.vectors = vectors_of_norm(l, request.target.n, request.bound);
      break;
    case TargetKind::HyperbolicPair:
      pair = find_hyperbolic_pair(l, request.bound);
      break;
    case TargetKind::MinusA2Pair:
      pair = find_minus_a2_pair(l, request.bound);
      break;
  }
  if (pair) out.vectors = {pair->first, pair->second};
  out.found = !out.vectors.empty();
  return out;
}

}  // namespace mukailat::vecsearch
