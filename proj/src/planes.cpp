#include "mukailat/planes.hpp"

#include <stdexcept>

#include "mukailat/lattice.hpp"

namespace mukailat::planes {

HastVariant parse_variant(std::string_view text) {
  if (text == "16k-3") return HastVariant::N16kMinus3;
  if (text == "16k+5") return HastVariant::N16kPlus5;
  throw std::invalid_argument("unknown variant (expected 16k-3 or 16k+5): " + std::string(text));
}

std::string to_string(HastVariant v) { return v == HastVariant::N16kMinus3 ? "16k-3" : "16k+5"; }

HastInstance::HastInstance(std::int64_t k, HastVariant variant) : k_(k), variant_(variant) {
  if (k < 2) throw std::invalid_argument("HastInstance: k must be at least 2");
}

Integer HastInstance::n() const {
  return variant_ == HastVariant::N16kMinus3 ? Integer(16 * k_ - 3) : Integer(16 * k_ + 5);
}

Integer HastInstance::target_d() const {
  return variant_ == HastVariant::N16kMinus3 ? Integer(6 * k_) : Integer(6 * k_ + 2);
}

IntMatrix hast_gram(const HastInstance& inst) {
  const Integer k = inst.k();
  if (inst.variant() == HastVariant::N16kMinus3) {
    return IntMatrix{{3, 2, 0}, {2, 4, 1}, {0, 1, 2 * k}};
  }
  return IntMatrix{{3, 2, 1}, {2, 4, 1}, {1, 1, 2 * k + 1}};
}

Integer restricted_disc(const HastInstance& inst, const Integer& x, const Integer& y, const Integer& z) {
  const IntMatrix basis{{1, 0, 0}, {x, y, z}};
  return det(basis * hast_gram(inst) * basis.transpose());
}

Integer disc_h2T(const HastInstance& inst) { return restricted_disc(inst, 0, 0, 1); }

BinaryQF restricted_form(const HastInstance& inst) {
  const Integer a = restricted_disc(inst, 0, 1, 0);
  const Integer c = restricted_disc(inst, 0, 0, 1);
  const Integer b = restricted_disc(inst, 0, 1, 1) - a - c;
  return {a, b, c};
}

std::vector<Coords> plane_classes(const HastInstance& inst, std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("plane_classes: bound must be nonnegative");
  const auto range = canonical_range<Integer>(bound);
  const IntMatrix gram = hast_gram(inst);
  std::vector<Coords> out;
  for (const auto& x : range) {
    for (const auto& y : range) {
      for (const auto& z : range) {
        const IntMatrix basis{{1, 0, 0}, {x, y, z}};
        if (det(basis * gram * basis.transpose()) == 8) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

}  // namespace mukailat::planes
