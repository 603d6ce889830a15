#include "mukailat/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mukailat/binqf.hpp"
#include "mukailat/catalog.hpp"
#include "mukailat/dayform.hpp"
#include "mukailat/numcond.hpp"
#include "mukailat/planes.hpp"
#include "mukailat/vecsearch.hpp"

namespace mukailat::sweep {

namespace {

using catalog::LatticeName;

SuiteResult admissible_d() {
  const std::vector<std::int64_t> expected{14, 26, 38, 42, 62, 74, 78, 86, 98};
  std::vector<std::int64_t> got;
  for (std::int64_t d = 1; d <= 100; ++d) {
    if (numcond::satisfies_star(d) && numcond::satisfies_starstar(d)) got.push_back(d);
  }
  std::ostringstream out;
  out << "admissible d <= 100:";
  for (auto d : got) out << ' ' << d;
  return {1, "", got == expected, out.str()};
}

SuiteResult a2_norm() {
  std::int64_t mismatches = 0;
  std::int64_t first_bad = 0;
  for (std::int64_t d = 2; d <= 10000; d += 2) {
    const bool cert = numcond::a2_certificate(d, d).has_value();
    if (cert != numcond::satisfies_starstar(d)) {
      if (mismatches++ == 0) first_bad = d;
    }
  }
  std::ostringstream out;
  out << "even d <= 10000, counterexamples: " << mismatches;
  if (mismatches > 0) out << " (first at d = " << first_bad << ")";
  return {2, "", mismatches == 0, out.str()};
}

SuiteResult hcf_lemma() {
  std::int64_t count = 0;
  std::int64_t failures = 0;
  for (long k = -6; k <= 6; ++k)
    for (long l = -6; l <= 6; ++l)
      for (long m = -6; m <= 6; ++m)
        for (long n = -6; n <= 6; ++n) {
          const dayform::DayInstance inst{k, l, m, n};
          ++count;
          if (!dayform::hcf_lemma_check(inst) || !dayform::eisenstein_identity_check(inst)) ++failures;
        }
  std::ostringstream out;
  out << count << " instances in [-6,6]^4, failures: " << failures;
  return {3, "", failures == 0 && count == 28561, out.str()};
}

SuiteResult q_identity() {
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  for (long k = -4; k <= 4; ++k)
    for (long l = -4; l <= 4; ++l)
      for (long m = -4; m <= 4; ++m)
        for (long n = -4; n <= 4; ++n) {
          const dayform::DayInstance inst{k, l, m, n};
          const auto c = dayform::day_coeffs(inst);
          for (long x = -5; x <= 5; ++x)
            for (long y = -5; y <= 5; ++y) {
              ++checked;
              const Integer poly = c.A * x * x + c.B * x * y + c.C * y * y;
              if (dayform::q_of_xy(inst, x, y) != poly) ++failures;
            }
        }
  std::ostringstream out;
  out << checked << " evaluations, mismatches: " << failures;
  return {4, "", failures == 0, out.str()};
}

SuiteResult mod3() {
  int forms = 0;
  int bad = 0;
  const std::set<unsigned> allowed{0b001u, 0b011u, 0b101u};
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b)
      for (long c = 0; c < 3; ++c) {
        const BinaryQF q{a, b, c};
        if (mod_nonneg(disc(q), 3) != 0) continue;
        ++forms;
        if (!allowed.contains(dayform::classify_mod3(q).bits())) ++bad;
      }
  std::ostringstream out;
  out << forms << " forms with 3 | disc, outside {0},{0,1},{0,2}: " << bad;
  return {5, "", bad == 0, out.str()};
}

SuiteResult prime_search() {
  struct Key {
    Integer a, b, c;
    bool operator<(const Key& o) const {
      if (a != o.a) return a < o.a;
      if (b != o.b) return b < o.b;
      return c < o.c;
    }
  };
  std::map<Key, std::optional<dayform::PrimeWitness>> cache;
  std::int64_t definite = 0;
  std::int64_t failures = 0;
  Integer max_prime = 0;
  std::string first_failure;
  for (long k = -6; k <= 6; ++k)
    for (long l = -6; l <= 6; ++l)
      for (long m = -6; m <= 6; ++m)
        for (long n = -6; n <= 6; ++n) {
          const auto q = dayform::day_coeffs({k, l, m, n}).q;
          if (!is_positive_definite(q) || !is_primitive(q)) continue;
          ++definite;
          const Key key{q.a, q.b, q.c};
          auto it = cache.find(key);
          if (it == cache.end()) it = cache.emplace(key, dayform::find_prime_1mod3(q, 50)).first;
          if (!it->second) {
            if (failures++ == 0) first_failure = to_string(q);
            continue;
          }
          if (it->second->p > max_prime) max_prime = it->second->p;
        }
  std::ostringstream out;
  out << definite << " definite primitive forms (" << cache.size() << " distinct), failures at bound 50: "
      << failures << ", max prime needed: " << max_prime.get_str();
  if (failures > 0) out << ", first failure " << first_failure;
  return {6, "", failures == 0, out.str()};
}

SuiteResult hast_det() {
  int bad = 0;
  for (std::int64_t k = 2; k <= 50; ++k) {
    for (auto v : {planes::HastVariant::N16kMinus3, planes::HastVariant::N16kPlus5}) {
      const planes::HastInstance inst(k, v);
      const bool minus = v == planes::HastVariant::N16kMinus3;
      const Integer n = minus ? 16 * k - 3 : 16 * k + 5;
      const Integer d = minus ? 6 * k : 6 * k + 2;
      if (det(planes::hast_gram(inst)) != n || planes::disc_h2T(inst) != d) ++bad;
    }
  }
  return {7, "", bad == 0, "k = 2..50, both variants, mismatches: " + std::to_string(bad)};
}

SuiteResult rqfs() {
  int bad = 0;
  int checked = 0;
  for (std::int64_t k = 2; k <= 10; ++k) {
    for (auto v : {planes::HastVariant::N16kMinus3, planes::HastVariant::N16kPlus5}) {
      const planes::HastInstance inst(k, v);
      const bool minus = v == planes::HastVariant::N16kMinus3;
      for (long x = -5; x <= 5; ++x)
        for (long y = -5; y <= 5; ++y)
          for (long z = -5; z <= 5; ++z) {
            ++checked;
            const Integer closed = minus ? Integer(8 * y * y + 6 * y * z + 6 * k * z * z)
                                         : Integer(8 * y * y + 2 * y * z + (6 * k + 2) * z * z);
            if (planes::restricted_disc(inst, x, y, z) != closed) ++bad;
          }
    }
  }
  std::ostringstream out;
  out << checked << " evaluations, mismatches: " << bad;
  return {8, "", bad == 0, out.str()};
}

SuiteResult min8() {
  int bad = 0;
  for (std::int64_t k = 2; k <= 50; ++k) {
    for (auto v : {planes::HastVariant::N16kMinus3, planes::HastVariant::N16kPlus5}) {
      const BinaryQF q = planes::restricted_form(planes::HastInstance(k, v));
      const std::vector<Point2> expected{{1, 0}, {-1, 0}};
      if (minimum(q) != 8 || represent(q, 8) != expected || !represent(q, 2).empty() ||
          !represent(q, 6).empty()) {
        ++bad;
      }
    }
  }
  return {9, "", bad == 0, "k = 2..50, both families, violations: " + std::to_string(bad)};
}

IntMatrix random_primitive_basis(const Lattice& ambient, std::size_t r, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-3, 3);
  while (true) {
    std::vector<Vector> rows(r, Vector(ambient.rank()));
    for (auto& row : rows)
      for (auto& x : row) x = coord(rng);
    const IntMatrix basis = IntMatrix::from_rows(rows);
    if (rank(basis) != r) continue;
    const IntMatrix sat = saturate(Sublattice(ambient, basis)).basis;
    if (sgn(det(Sublattice(ambient, sat).induced_gram())) == 0) continue;
    return sat;
  }
}

SuiteResult disc_duality() {
  std::mt19937_64 rng(20240601);
  int bad = 0;
  int total = 0;
  for (auto name : {LatticeName::E8, LatticeName::Mukai}) {
    const Lattice ambient = catalog::make(name);
    for (int i = 0; i < 100; ++i) {
      const std::size_t r = 1 + static_cast<std::size_t>(i % 3);
      ++total;
      if (!disc_duality_check(Sublattice(ambient, random_primitive_basis(ambient, r, rng)))) ++bad;
    }
  }
  return {10, "", bad == 0 && total == 200,
          std::to_string(total) + " primitive sublattices (E8, Mukai), violations: " + std::to_string(bad)};
}

SuiteResult witness() {
  const Lattice u14 = catalog::direct_sum(catalog::make(LatticeName::U), catalog::rank_one(-14));
  const auto pair = vecsearch::find_minus_a2_pair(u14, 3);
  bool ok = pair.has_value();
  std::string detail = "a2-pair in U+(-14): ";
  if (pair) {
    const IntMatrix gram = Sublattice(u14, IntMatrix::from_rows({pair->first, pair->second})).induced_gram();
    ok = gram == IntMatrix{{-2, 1}, {1, -2}};
    detail += "found";
  } else {
    detail += "none";
  }
  const bool none = !vecsearch::find_hyperbolic_pair(catalog::make(LatticeName::MinusA2), 10).has_value();
  detail += none ? "; no u-pair in -A2" : "; unexpected u-pair in -A2";
  return {11, "", ok && none, detail};
}

SuiteResult catalog_sanity() {
  const Lattice mukai = catalog::make(LatticeName::Mukai);
  const Lattice e8 = catalog::make(LatticeName::E8);
  const Signature s = signature(mukai);
  const bool ok = mukai.discriminant() == 1 && s == Signature{20, 4, 0} && mukai.is_even() &&
                  e8.discriminant() == 1 && is_positive_definite(e8) && e8.is_even();
  std::ostringstream out;
  out << "Mukai det " << mukai.discriminant().get_str() << ", signature (" << s.positive << "," << s.negative << ","
      << s.zero << "); E8 det " << e8.discriminant().get_str();
  return {12, "", ok, out.str()};
}

struct Suite {
  SuiteInfo info;
  std::function<SuiteResult()> body;
};

const std::vector<Suite>& registry() {
  static const std::vector<Suite> all{
      {{1, "admissible-d"}, admissible_d},     {{2, "a2-norm-equivalence"}, a2_norm},
      {{3, "hcf-lemma"}, hcf_lemma},           {{4, "q-identity"}, q_identity},
      {{5, "mod3-trichotomy"}, mod3},          {{6, "prime-search"}, prime_search},
      {{7, "hast-determinants"}, hast_det},    {{8, "restricted-disc"}, rqfs},
      {{9, "minimum-8"}, min8},                {{10, "disc-duality"}, disc_duality},
      {{11, "witness-regression"}, witness},   {{12, "catalog-sanity"}, catalog_sanity},
  };
  return all;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& s : registry()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

std::vector<SuiteResult> run(const std::vector<int>& ids, unsigned threads) {
  std::vector<const Suite*> selected;
  for (const auto& s : registry()) {
    if (ids.empty() || std::find(ids.begin(), ids.end(), s.info.id) != ids.end()) selected.push_back(&s);
  }
  for (int id : ids) {
    const bool known = std::any_of(registry().begin(), registry().end(),
                                   [id](const Suite& s) { return s.info.id == id; });
    if (!known) throw std::invalid_argument("unknown sweep suite: " + std::to_string(id));
  }

  std::vector<SuiteResult> results(selected.size());
  auto run_one = [&](std::size_t i) {
    try {
      results[i] = selected[i]->body();
    } catch (const std::exception& e) {
      results[i] = {selected[i]->info.id, "", false, std::string("exception: ") + e.what()};
    }
    results[i].id = selected[i]->info.id;
    results[i].name = selected[i]->info.name;
  };

  if (threads <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(selected.size()));
    for (unsigned t = 0; t < count; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) run_one(i);
      });
    }
  }
  std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return results;
}

unsigned threads_from_env() {
  const char* value = std::getenv("MUKAILAT_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  char* end = nullptr;
  const unsigned long n = std::strtoul(value, &end, 10);
  if (*end != '\0') return 0;
  return static_cast<unsigned>(std::min<unsigned long>(n, 256));
}

}  // namespace mukailat::sweep
