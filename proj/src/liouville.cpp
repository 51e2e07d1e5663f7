#include "liouville/liouville.hpp"

#include <algorithm>

#include "liouville/cfrac.hpp"

namespace liouville {

ExactReal series_constant(int base, const ScheduleSpec& schedule, const DigitSpec& digits) {
  SeriesSpec spec;
  spec.base = base;
  spec.schedule = schedule;
  spec.digits = digits;
  return make_series(spec);
}

// ---------------------------------------------------------------------------
// u_level
// ---------------------------------------------------------------------------

namespace {

// Incremental-power comparator: decides d <=> q^{-a/2^e} via
// num(d)^{2^e} * q^a  <=>  den(d)^{2^e}.
class PowCompare {
 public:
  PowCompare(const Rat& d, const Int& q) : num_(d.get_num()), den_(d.get_den()), q_(q) {}

  // one more halving level: d^{2^e} -> d^{2^(e+1)}
  void square() {
    num_ = num_ * num_;
    den_ = den_ * den_;
  }

  // sign of d - q^{-a} at the current level (a >= 0)
  int cmp(const Int& a) const {
    Int lhs = num_ * pow_q(a);
    return ::cmp(lhs, den_);
  }

 private:
  Int pow_q(const Int& a) const {
    if (!mpz_fits_ulong_p(a.get_mpz_t())) raise(Errc::BudgetExceeded, "u_level exponent too large");
    return ipow(q_, mpz_get_ui(a.get_mpz_t()));
  }
  Int num_, den_, q_;
};

// Dyadic bracket [lo, hi] of width <= 2^-grid_exp around u(d) = -log_q d,
// for 0 < d <= 1/2. Collapses to a point on exact grid hits.
QInterval bracket_u(const Rat& d, const Int& q, long grid_exp) {
  PowCompare pc(d, q);
  // integer phase: largest n >= 0 with d <= q^-n  (so u in [n, n+1])
  Int n = 0;
  Int step = 1;
  while (pc.cmp(n + step) <= 0) {
    n += step;
    step *= 2;
  }
  while (step > 1) {
    step /= 2;
    if (pc.cmp(n + step) <= 0) n += step;
  }
  int c0 = pc.cmp(n);
  if (c0 == 0) return QInterval::point(Rat(n));
  // dyadic phase: u in [A/2^E, (A+1)/2^E]
  Int A = n;
  for (long E = 0; E < grid_exp; ++E) {
    pc.square();
    Int mid = 2 * A + 1;  // (2A+1)/2^(E+1)
    int c = pc.cmp(mid);
    if (c == 0) return QInterval::point(Rat(mid) / pow2(E + 1));
    if (c < 0)
      A = mid;  // d < q^-mid  =>  u > mid
    else
      A = 2 * A;
  }
  return QInterval(Rat(A) / pow2(grid_exp), Rat(A + 1) / pow2(grid_exp));
}

}  // namespace

QInterval u_level(const ExactReal& x, const Int& q, unsigned x_budget, long u_grid_exp) {
  if (q < 2) raise(Errc::DomainError, "u_level requires q >= 2");
  QInterval d(Rat(0), Rat(1));
  unsigned k = 16;
  for (;;) {
    d = nearest_int_dist(q, x, k);
    if (d.is_point() && d.lo == 0) raise(Errc::ZeroDistance, "||qx|| = 0 certified");
    // separated from zero and relatively tight
    if (d.lo > 0 && (d.hi - d.lo) * 256 <= d.lo) break;
    if (k >= x_budget)
      raise(Errc::RefinementBudgetExceeded, "||qx|| not separated from zero at precision " +
                                                std::to_string(x_budget));
    k = std::min(x_budget, k * 2);
  }
  // u(.) is decreasing in d
  QInterval from_hi = bracket_u(std::min(d.hi, Rat(1, 2)), q, u_grid_exp);
  QInterval from_lo = bracket_u(d.lo, q, u_grid_exp);
  return QInterval(from_hi.lo, from_lo.hi);
}

// ---------------------------------------------------------------------------
// certificates
// ---------------------------------------------------------------------------

namespace {

unsigned witness_check_budget(const Witness& w) {
  unsigned long qb = mpz_sizeinbase(w.q.get_mpz_t(), 2);
  unsigned long need = 2 * (static_cast<unsigned long>(w.n) + 1) * qb + 64;
  return static_cast<unsigned>(std::min<unsigned long>(need, 1u << 26));
}

bool witness_holds(const ExactReal& x, const Witness& w, bool open) {
  Rat center(w.p, w.q);
  center.canonicalize();
  Rat bound = qpow(Rat(w.q), -static_cast<long>(w.n));
  return check_approx_error(x, center, bound, /*closed=*/!open, witness_check_budget(w));
}

}  // namespace

LiouvilleCertificate certify_level(const ExactReal& x, unsigned N, WitnessSearchBudget budget) {
  if (N == 0) raise(Errc::DomainError, "certify_level requires N >= 1");
  LiouvilleCertificate cert;
  cert.recipe = x.recipe();

  // structural witnesses from the construction, when the node provides them
  if (auto w1 = x.node()->witness_for_level(1)) {
    for (unsigned n = 1; n <= N; ++n) {
      auto w = x.node()->witness_for_level(n);
      if (!w)
        raise(Errc::WitnessSearchExhausted,
              "construction provides no witness at level " + std::to_string(n));
      cert.witnesses.push_back({n, w->first, w->second});
    }
    return cert;
  }

  // fallback: continued-fraction convergents
  std::vector<Convergent> conv;
  try {
    conv = convergents(cf_expand(x, budget.cf_depth, budget.precision));
  } catch (const Error& e) {
    if (e.code() != Errc::RefinementBudgetExceeded) throw;
    raise(Errc::WitnessSearchExhausted, "convergent expansion stalled");
  }
  for (unsigned n = 1; n <= N; ++n) {
    bool found = false;
    for (const auto& c : conv) {
      if (c.q < 2) continue;
      Witness w{n, c.p, c.q};
      bool ok = false;
      try {
        ok = witness_holds(x, w, /*open=*/false);
      } catch (const Error& e) {
        if (e.code() != Errc::RefinementBudgetExceeded) throw;
        continue;  // undecidable at budget: skip this convergent
      }
      if (ok) {
        cert.witnesses.push_back(w);
        found = true;
        break;
      }
    }
    if (!found)
      raise(Errc::WitnessSearchExhausted,
            "no level-" + std::to_string(n) + " witness among " + std::to_string(conv.size()) +
                " convergents");
  }
  return cert;
}

bool verify_certificate(const ExactReal& x, const LiouvilleCertificate& cert) {
  for (size_t i = 0; i < cert.witnesses.size(); ++i) {
    const Witness& w = cert.witnesses[i];
    if (w.n != i + 1) raise(Errc::InvalidCertificate, "witness levels must be contiguous from 1");
    if (w.q < 2) raise(Errc::InvalidCertificate, "witness denominator must be >= 2");
  }
  for (const Witness& w : cert.witnesses)
    if (!witness_holds(x, w, /*open=*/false)) return false;
  return true;
}

bool un_membership(const ExactReal& x, unsigned n, const Witness& w, unsigned budget) {
  if (w.q < 2) raise(Errc::DomainError, "un_membership requires q >= 2");
  Rat center(w.p, w.q);
  center.canonicalize();
  Rat bound = qpow(Rat(w.q), -static_cast<long>(n));
  return check_approx_error(x, center, bound, /*closed=*/false,
                            std::max(budget, witness_check_budget({n, w.p, w.q})));
}

}  // namespace liouville
