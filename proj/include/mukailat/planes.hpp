#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mukailat/binqf.hpp"
#include "mukailat/intmatrix.hpp"

namespace mukailat::planes {

enum class HastVariant { N16kMinus3, N16kPlus5 };

/// "16k-3" or "16k+5"; throws std::invalid_argument otherwise.
HastVariant parse_variant(std::string_view text);
std::string to_string(HastVariant v);

/// Intersection data on <h^2, Q, T> for a given k >= 2.
class HastInstance {
 public:
  /// Throws std::invalid_argument when k < 2.
  HastInstance(std::int64_t k, HastVariant variant);

  std::int64_t k() const { return k_; }
  HastVariant variant() const { return variant_; }

  /// 16k - 3 or 16k + 5.
  Integer n() const;
  /// 6k or 6k + 2.
  Integer target_d() const;

 private:
  std::int64_t k_;
  HastVariant variant_;
};

/// Gram of (h^2, Q, T): [[3,2,0],[2,4,1],[0,1,2k]] or [[3,2,1],[2,4,1],[1,1,2k+1]].
IntMatrix hast_gram(const HastInstance& inst);

/// det of the Gram of (h^2, T).
Integer disc_h2T(const HastInstance& inst);

/// det of the Gram of (h^2, T'), T' = x h^2 + y Q + z T, from the 3x3 Gram.
Integer restricted_disc(const HastInstance& inst, const Integer& x, const Integer& y, const Integer& z);

/// The binary form (y, z) -> restricted_disc(inst, 0, y, z), recovered from
/// three Gram evaluations by polarization.
BinaryQF restricted_form(const HastInstance& inst);

using Coords = std::array<Integer, 3>;

/// All (x, y, z) with |coordinates| <= bound and restricted_disc = 8, in
/// canonical order.
std::vector<Coords> plane_classes(const HastInstance& inst, std::int64_t bound);

}  // namespace mukailat::planes
