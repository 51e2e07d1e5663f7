#ifndef LIOUVILLE_INTERVAL_HPP
#define LIOUVILLE_INTERVAL_HPP

#include <optional>
#include <string>

#include "liouville/rational.hpp"

namespace liouville {

// Closed interval with exact rational endpoints, lo <= hi. All arithmetic
// is exact (no rounding step), so enclosure proofs reduce to rational
// comparisons.
struct QInterval {
  Rat lo, hi;

  QInterval() : lo(0), hi(0) {}
  QInterval(Rat l, Rat h);
  static QInterval point(const Rat& v) { return QInterval(v, v); }

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool is_point() const { return lo == hi; }

  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains(const QInterval& o) const { return lo <= o.lo && o.hi <= hi; }
  // o inside the open interior of *this.
  bool contains_strictly(const QInterval& o) const { return lo < o.lo && o.hi < hi; }
  bool excludes(const Rat& v) const { return v < lo || hi < v; }

  std::string str() const;
};

QInterval operator+(const QInterval& a, const QInterval& b);
QInterval operator-(const QInterval& a, const QInterval& b);
QInterval operator*(const QInterval& a, const QInterval& b);
QInterval operator-(const QInterval& a);
QInterval operator*(const Rat& s, const QInterval& a);

// Reciprocal / quotient; the divisor must exclude 0.
QInterval recip(const QInterval& a);
QInterval operator/(const QInterval& a, const QInterval& b);

// Image of |.| over a.
QInterval abs_image(const QInterval& a);

// Empty when disjoint.
std::optional<QInterval> intersect(const QInterval& a, const QInterval& b);

// Image of t -> min_{m in Z} |t - m| over a; always inside [0, 1/2].
QInterval nearest_int_dist_image(const QInterval& a);

// Round endpoints outward to the grid of step 2^-grid_exp (adds at most one
// grid step each side). Used to keep denominators of transcendental-node
// endpoints linear in the precision index.
QInterval round_out_dyadic(const QInterval& a, long grid_exp);

}  // namespace liouville

#endif  // LIOUVILLE_INTERVAL_HPP
