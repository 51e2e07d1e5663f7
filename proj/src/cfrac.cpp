#include "liouville/cfrac.hpp"

#include <algorithm>

namespace liouville {

CFrac cf_expand(const Rat& x, unsigned depth) {
  if (depth == 0) raise(Errc::DomainError, "cf_expand depth must be >= 1");
  CFrac cf;
  Rat t = x;
  for (;;) {
    Int a = floor_q(t);
    cf.quotients.push_back(a);
    Rat frac = t - Rat(a);
    if (frac == 0) {
      cf.exact = true;
      return cf;
    }
    if (cf.quotients.size() == depth) return cf;  // truncated by depth
    t = 1 / frac;
  }
}

CFrac cf_expand(const ExactReal& x, unsigned depth, unsigned budget) {
  if (depth == 0) raise(Errc::DomainError, "cf_expand depth must be >= 1");
  if (auto v = x.rational_value()) return cf_expand(*v, depth);

  CFrac cf;
  // convergent state: (pm1, qm1) = latest, (pm2, qm2) = previous
  Int pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
  unsigned k = 16;
  while (cf.quotients.size() < depth) {
    QInterval J = x.refine(k);
    // tail value t_m = (pm2 - qm2 x) / (qm1 x - pm1), the m-th complete quotient
    QInterval num(Rat(pm2) - Rat(qm2) * J.hi, Rat(pm2) - Rat(qm2) * J.lo);
    QInterval den(Rat(qm1) * J.lo - Rat(pm1), Rat(qm1) * J.hi - Rat(pm1));
    bool emitted = false;
    if (den.excludes(0)) {
      QInterval T = num / den;
      Int fa = floor_q(T.lo), fb = floor_q(T.hi);
      if (fa == fb && T.lo > Rat(fa)) {
        cf.quotients.push_back(fa);
        Int p = fa * pm1 + pm2, q = fa * qm1 + qm2;
        pm2 = pm1; pm1 = p;
        qm2 = qm1; qm1 = q;
        emitted = true;
      }
    }
    if (!emitted) {
      if (k >= budget)
        raise(Errc::RefinementBudgetExceeded,
              "continued fraction stalled after " + std::to_string(cf.quotients.size()) +
                  " quotients (value may be rational)");
      k = std::min(budget, k * 2);
    }
  }
  return cf;
}

std::vector<Convergent> convergents(const CFrac& cf) {
  std::vector<Convergent> out;
  out.reserve(cf.quotients.size());
  Int pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
  for (const Int& a : cf.quotients) {
    Int p = a * pm1 + pm2, q = a * qm1 + qm2;
    out.push_back({p, q});
    pm2 = pm1; pm1 = p;
    qm2 = qm1; qm1 = q;
  }
  return out;
}

Rat cf_value(const CFrac& cf) {
  if (cf.quotients.empty()) raise(Errc::DomainError, "empty continued fraction");
  Rat v(cf.quotients.back());
  for (size_t i = cf.quotients.size() - 1; i-- > 0;) {
    if (v == 0) raise(Errc::DomainError, "continued fraction with zero tail");
    v = Rat(cf.quotients[i]) + 1 / v;
  }
  return v;
}

namespace {

bool best_approx_check_exact(const Rat& x, const Int& p, const Int& q) {
  Rat d = abs(Rat(q) * x - Rat(p));
  for (Int qq = 1; qq < q; ++qq) {
    Rat dq = Rat(qq) * x;
    Rat n = abs(dq - Rat(round_q(dq)));
    if (!(n > d)) return false;
  }
  return true;
}

}  // namespace

bool best_approx_check(const ExactReal& x, const Int& p, const Int& q, unsigned budget) {
  if (q < 2) raise(Errc::DomainError, "best_approx_check requires q >= 2");
  if (auto v = x.rational_value()) return best_approx_check_exact(*v, p, q);

  std::vector<Int> pending;
  for (Int qq = 1; qq < q; ++qq) pending.push_back(qq);
  unsigned k = static_cast<unsigned>(mpz_sizeinbase(q.get_mpz_t(), 2)) + 8;
  for (;;) {
    QInterval J = x.refine(k);
    QInterval D = abs_image(QInterval(Rat(q) * J.lo - Rat(p), Rat(q) * J.hi - Rat(p)));
    std::vector<Int> still;
    for (const Int& qq : pending) {
      QInterval N = nearest_int_dist_image(Rat(qq) * J);
      if (N.lo > D.hi) continue;      // ||q'x|| > |qx-p| certified
      if (N.hi <= D.lo) return false; // ||q'x|| <= |qx-p| certified
      still.push_back(qq);
    }
    if (still.empty()) return true;
    if (k >= budget)
      raise(Errc::RefinementBudgetExceeded, "best-approximation tie unresolved at precision " +
                                                std::to_string(budget));
    pending = std::move(still);
    k = std::min(budget, k * 2);
  }
}

namespace {

bool perfect_power(const Int& n, unsigned long power) {
  if (power == 1) return true;
  if (n == 0) return true;
  if (n < 0) {
    if (power % 2 == 0) return false;
    return exact_kth_root(-n, power).has_value();
  }
  return exact_kth_root(n, power).has_value();
}

}  // namespace

std::vector<size_t> maillet_root_witnesses(const ExactReal& x, unsigned long power, unsigned depth,
                                           unsigned budget) {
  if (power < 1) raise(Errc::DomainError, "maillet_root_witnesses requires power >= 1");
  CFrac cf = cf_expand(x, depth, budget);
  auto conv = convergents(cf);
  std::vector<size_t> out;
  for (size_t i = 0; i < conv.size(); ++i) {
    if (power == 1) {
      out.push_back(i);
      continue;
    }
    if (conv[i].q < 2) continue;
    if (perfect_power(conv[i].p, power) && perfect_power(conv[i].q, power)) out.push_back(i);
  }
  return out;
}

}  // namespace liouville
