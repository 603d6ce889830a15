#include "mukailat/binqf.hpp"

#include <algorithm>
#include <stdexcept>

namespace mukailat {

namespace {

void require_positive_definite(const BinaryQF& q, const char* what) {
  if (!is_positive_definite(q)) {
    throw std::invalid_argument(std::string(what) + ": form " + to_string(q) + " is not positive definite");
  }
}

}  // namespace

std::string to_string(const BinaryQF& q) {
  return "(" + q.a.get_str() + ", " + q.b.get_str() + ", " + q.c.get_str() + ")";
}

bool canonical_less(const Point2& p, const Point2& q) {
  if (canonical_less(p.x, q.x)) return true;
  if (canonical_less(q.x, p.x)) return false;
  return canonical_less(p.y, q.y);
}

Integer disc(const BinaryQF& q) { return q.b * q.b - 4 * q.a * q.c; }

Integer content(const BinaryQF& q) { return gcd(gcd(q.a, q.b), q.c); }

bool is_primitive(const BinaryQF& q) { return content(q) == 1; }

bool is_positive_definite(const BinaryQF& q) { return sgn(q.a) > 0 && sgn(disc(q)) < 0; }

BinaryQF reduce(const BinaryQF& q) {
  require_positive_definite(q, "reduce");
  BinaryQF r = q;
  while (true) {
    // x -> x + t y moves b into (-a, a].
    const Integer t = floor_div(r.a - r.b, 2 * r.a);
    r.c = r.a * t * t + r.b * t + r.c;
    r.b = r.b + 2 * r.a * t;
    if (r.a > r.c) {
      // (x, y) -> (-y, x)
      std::swap(r.a, r.c);
      r.b = -r.b;
      continue;
    }
    break;
  }
  if (r.a == r.c && sgn(r.b) < 0) r.b = -r.b;
  return r;
}

Integer minimum(const BinaryQF& q) {
  require_positive_definite(q, "minimum");
  return reduce(q).a;
}

void for_each_point_at_most(const BinaryQF& q, const Integer& limit, const std::optional<Integer>& box,
                            const std::function<void(const Integer&, const Integer&, const Integer&)>& visit) {
  require_positive_definite(q, "for_each_point_at_most");
  if (sgn(limit) < 0) return;
  const Integer abs_d = -disc(q);
  const Integer four_a_limit = 4 * q.a * limit;
  Integer y_max = isqrt(Integer(four_a_limit / abs_d));
  if (box) y_max = std::min(y_max, *box);
  for (Integer y = -y_max; y <= y_max; ++y) {
    const Integer rest = four_a_limit - abs_d * y * y;
    if (sgn(rest) < 0) continue;
    const Integer s = isqrt(rest);
    const Integer by = q.b * y;
    Integer x_lo = ceil_div(-s - by, 2 * q.a);
    Integer x_hi = floor_div(s - by, 2 * q.a);
    if (box) {
      x_lo = std::max(x_lo, Integer(-*box));
      x_hi = std::min(x_hi, *box);
    }
    for (Integer x = x_lo; x <= x_hi; ++x) {
      const Integer v = q(x, y);
      if (v <= limit) visit(x, y, v);
    }
  }
}

std::vector<Point2> represent(const BinaryQF& q, const Integer& n) {
  require_positive_definite(q, "represent");
  if (sgn(n) < 0) throw std::invalid_argument("represent: target value must be nonnegative");
  std::vector<Point2> out;
  for_each_point_at_most(q, n, std::nullopt, [&](const Integer& x, const Integer& y, const Integer& v) {
    if (v == n) out.push_back({x, y});
  });
  std::sort(out.begin(), out.end(), [](const Point2& p, const Point2& r) { return canonical_less(p, r); });
  return out;
}

}  // namespace mukailat
