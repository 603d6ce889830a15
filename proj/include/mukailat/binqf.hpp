#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mukailat/integer.hpp"

namespace mukailat {

/// a x^2 + b xy + c y^2
struct BinaryQF {
  Integer a = 0;
  Integer b = 0;
  Integer c = 0;

  Integer operator()(const Integer& x, const Integer& y) const { return a * x * x + b * x * y + c * y * y; }

  friend bool operator==(const BinaryQF&, const BinaryQF&) = default;
};

std::string to_string(const BinaryQF& q);

struct Point2 {
  Integer x = 0;
  Integer y = 0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Canonical order (0 < 1 < -1 < 2 < ...), x first.
bool canonical_less(const Point2& p, const Point2& q);

Integer disc(const BinaryQF& q);
Integer content(const BinaryQF& q);
bool is_primitive(const BinaryQF& q);
bool is_positive_definite(const BinaryQF& q);

/// Gauss-reduced equivalent form: |b| <= a <= c, with b >= 0 when |b| == a or
/// a == c. Throws std::invalid_argument unless q is positive definite.
BinaryQF reduce(const BinaryQF& q);

/// Smallest nonzero value of a positive definite form (leading coefficient of
/// its reduced form).
Integer minimum(const BinaryQF& q);

/// All integer solutions of q(x, y) = n, in canonical order. Positive definite
/// q only.
std::vector<Point2> represent(const BinaryQF& q, const Integer& n);

/// Calls `visit(x, y, q(x, y))` for every point with q(x, y) <= limit and, when
/// `box` is given, |x|, |y| <= *box. The points come from the exact ellipse
/// (2ax + by)^2 + |D| y^2 <= 4a limit; no order is promised.
void for_each_point_at_most(const BinaryQF& q, const Integer& limit, const std::optional<Integer>& box,
                            const std::function<void(const Integer&, const Integer&, const Integer&)>& visit);

}  // namespace mukailat
