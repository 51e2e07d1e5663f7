#include "liouville/interval.hpp"

#include <algorithm>

namespace liouville {

QInterval::QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) raise(Errc::DomainError, "interval endpoints out of order");
}

std::string QInterval::str() const { return "[" + to_string(lo) + ", " + to_string(hi) + "]"; }

QInterval operator+(const QInterval& a, const QInterval& b) {
  return QInterval(a.lo + b.lo, a.hi + b.hi);
}

QInterval operator-(const QInterval& a, const QInterval& b) {
  return QInterval(a.lo - b.hi, a.hi - b.lo);
}

QInterval operator-(const QInterval& a) { return QInterval(-a.hi, -a.lo); }

QInterval operator*(const QInterval& a, const QInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return QInterval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

QInterval operator*(const Rat& s, const QInterval& a) {
  if (s >= 0) return QInterval(s * a.lo, s * a.hi);
  return QInterval(s * a.hi, s * a.lo);
}

QInterval recip(const QInterval& a) {
  if (a.lo <= 0 && 0 <= a.hi) raise(Errc::DivisorNotSeparatedFromZero, "reciprocal of interval containing 0");
  return QInterval(1 / a.hi, 1 / a.lo);
}

QInterval operator/(const QInterval& a, const QInterval& b) { return a * recip(b); }

QInterval abs_image(const QInterval& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return -a;
  return QInterval(Rat(0), std::max(-a.lo, a.hi));
}

std::optional<QInterval> intersect(const QInterval& a, const QInterval& b) {
  Rat lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
  if (lo > hi) return std::nullopt;
  return QInterval(lo, hi);
}

QInterval nearest_int_dist_image(const QInterval& a) {
  static const Rat half(1, 2);
  if (a.width() >= 1) return QInterval(Rat(0), half);
  // Shift so that lo lands in [0, 1): distances are invariant under integer
  // translation.
  Int base = floor_q(a.lo);
  Rat lo = a.lo - Rat(base), hi = a.hi - Rat(base);  // 0 <= lo < 1, lo <= hi < 2
  auto dist = [&](const Rat& t) {
    Rat f = t - Rat(floor_q(t + half));  // in [-1/2, 1/2)
    return abs(f);
  };
  Rat dlo = dist(lo), dhi = dist(hi);
  Rat mn = std::min(dlo, dhi), mx = std::max(dlo, dhi);
  // interior extrema: integers give distance 0, half-integers give 1/2
  for (int m = 0; m <= 2; ++m) {
    Rat z(m);
    if (lo < z && z < hi) mn = 0;
    Rat h = Rat(2 * m + 1, 2);
    if (lo < h && h < hi) mx = half;
  }
  if (lo == 0 || hi == 0) mn = 0;  // endpoint exactly on an integer
  return QInterval(mn, mx);
}

QInterval round_out_dyadic(const QInterval& a, long grid_exp) {
  if (grid_exp < 0) return a;
  unsigned long g = static_cast<unsigned long>(grid_exp);
  Int lo_n, hi_n;
  Int lo_scaled = a.lo.get_num(), hi_scaled = a.hi.get_num();
  mpz_mul_2exp(lo_scaled.get_mpz_t(), lo_scaled.get_mpz_t(), g);
  mpz_mul_2exp(hi_scaled.get_mpz_t(), hi_scaled.get_mpz_t(), g);
  mpz_fdiv_q(lo_n.get_mpz_t(), lo_scaled.get_mpz_t(), a.lo.get_den().get_mpz_t());
  mpz_cdiv_q(hi_n.get_mpz_t(), hi_scaled.get_mpz_t(), a.hi.get_den().get_mpz_t());
  Rat step = pow2(-grid_exp);
  return QInterval(Rat(lo_n) * step, Rat(hi_n) * step);
}

}  // namespace liouville
