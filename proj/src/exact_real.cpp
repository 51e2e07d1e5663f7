#include "liouville/exact_real.hpp"

#include <algorithm>
#include <climits>

#include "liouville/detail/series_node.hpp"
#include "liouville/errors.hpp"

namespace liouville {
namespace detail {

namespace {

// Sound magnitude bound: smallest-ish e with max|J| <= 2^e, or the sentinel
// for an exactly-zero interval.
constexpr long kZeroMag = LONG_MIN / 4;

long mag_exp(const QInterval& J) {
  Rat m = std::max(abs(J.lo), abs(J.hi));
  if (m == 0) return kZeroMag;
  return ceil_log2(m);
}

long pos(long v) { return v > 0 ? v : 0; }

}  // namespace

QInterval RealNode::refine(unsigned k) const {
  std::scoped_lock lock(mu_);
  if (chain_.empty()) {
    QInterval j0 = enclose(0);
    chain_.emplace_back(0u, j0);
    cover_ = 0;
  }
  auto advance_cover = [&](const QInterval& J, unsigned j) {
    Rat w = J.width();
    if (w == 0) {
      cover_ = LONG_MAX / 2;
      return;
    }
    long fl = floor_log2(w);
    long m = (pow2(fl) == w) ? -fl : -(fl + 1);  // largest m with w <= 2^-m
    cover_ = std::max<long>(m, j);
  };
  if (cover_ == 0 && chain_.size() == 1) advance_cover(chain_.back().second, 0);
  while (static_cast<long>(k) > cover_) {
    unsigned j = static_cast<unsigned>(cover_ + 1);
    QInterval e = enclose(j);
    auto meet = intersect(e, chain_.back().second);
    if (!meet) throw std::logic_error("ExactReal: refinement chain became empty");
    if (meet->width() > pow2(-static_cast<long>(j)))
      throw std::logic_error("ExactReal: enclosure width contract violated");
    chain_.emplace_back(j, *meet);
    advance_cover(*meet, j);
  }
  // floor entry for k
  auto it = std::upper_bound(
      chain_.begin(), chain_.end(), k,
      [](unsigned v, const std::pair<unsigned, QInterval>& p) { return v < p.first; });
  return std::prev(it)->second;
}

std::optional<Rat> RealNode::rational_value() const { return std::nullopt; }

// ---------------------------------------------------------------------------
// Rational points
// ---------------------------------------------------------------------------

class RationalNode final : public RealNode {
 public:
  RationalNode(Rat v, RecipePtr rec) : RealNode(std::move(rec)), v_(std::move(v)) {}
  std::optional<Rat> rational_value() const override { return v_; }

 protected:
  QInterval enclose(unsigned) const override { return QInterval::point(v_); }

 private:
  Rat v_;
};

// ---------------------------------------------------------------------------
// Field operations
// ---------------------------------------------------------------------------

class ArithNode final : public RealNode {
 public:
  ArithNode(FieldOp op, NodePtr x, NodePtr y, RecipePtr rec, unsigned sep_prec, long sep_min_exp)
      : RealNode(std::move(rec)),
        op_(op),
        x_(std::move(x)),
        y_(std::move(y)),
        sep_prec_(sep_prec),
        sep_min_exp_(sep_min_exp) {}

 protected:
  QInterval enclose(unsigned k) const override {
    unsigned g = target(k);
    switch (op_) {
      case FieldOp::Add:
        return x_->refine(g + 1) + y_->refine(g + 1);
      case FieldOp::Sub:
        return x_->refine(g + 1) - y_->refine(g + 1);
      case FieldOp::Mul: {
        long mx = mag_exp(x_->refine(2));
        long my = mag_exp(y_->refine(2));
        if (mx == kZeroMag || my == kZeroMag) return QInterval::point(Rat(0));
        unsigned kx = g + 1 + static_cast<unsigned>(pos(my));
        unsigned ky = g + 1 + static_cast<unsigned>(pos(mx));
        return x_->refine(kx) * y_->refine(ky);
      }
      case FieldOp::Div: {
        long mx = mag_exp(x_->refine(2));
        long m = sep_min_exp_;  // |y| >= 2^m over the separation interval
        if (mx == kZeroMag) return QInterval::point(Rat(0));
        unsigned kx = g + 2 + static_cast<unsigned>(pos(-m));
        unsigned ky = std::max<unsigned>(
            sep_prec_, g + 2 + static_cast<unsigned>(pos(mx)) + static_cast<unsigned>(pos(-2 * m)));
        return x_->refine(kx) * recip(y_->refine(ky));
      }
    }
    raise(Errc::DomainError, "unreachable field op");
  }

 private:
  FieldOp op_;
  NodePtr x_, y_;
  unsigned sep_prec_;
  long sep_min_exp_;
};

namespace {

struct Separation {
  unsigned prec;
  long min_exp;
};

Separation separate_from_zero(const NodePtr& y, unsigned budget, Errc code) {
  unsigned k = 0;
  for (;;) {
    QInterval J = y->refine(k);
    if (J.excludes(0)) {
      Rat min_abs = J.lo > 0 ? J.lo : -J.hi;
      return {k, floor_log2(min_abs)};
    }
    if (k >= budget) raise(code, "value not separated from zero within precision " + std::to_string(budget));
    k = k == 0 ? 4 : std::min(budget, k * 2);
  }
}

RecipePtr rational_recipe(const Rat& v) {
  auto r = std::make_shared<Recipe>();
  r->kind = Recipe::Kind::Rational;
  r->value = v;
  return r;
}

const char* op_name(FieldOp op) {
  switch (op) {
    case FieldOp::Add: return "add";
    case FieldOp::Sub: return "sub";
    case FieldOp::Mul: return "mul";
    case FieldOp::Div: return "div";
  }
  return "?";
}

RecipePtr derived_recipe(const char* op, std::initializer_list<RecipePtr> children,
                         Recipe::Kind kind, const Rat& param = Rat(0)) {
  for (const auto& c : children)
    if (!c) return nullptr;
  auto r = std::make_shared<Recipe>();
  r->kind = kind;
  r->op = op;
  r->value = param;
  r->children.assign(children.begin(), children.end());
  return r;
}

}  // namespace

}  // namespace detail

using detail::NodePtr;

ExactReal::ExactReal(const Rat& v)
    : node_(std::make_shared<detail::RationalNode>(v, detail::rational_recipe(v))) {}

ExactReal field_op(FieldOp op, const ExactReal& x, const ExactReal& y, unsigned separation_budget) {
  RecipePtr rec =
      detail::derived_recipe(detail::op_name(op), {x.recipe(), y.recipe()}, Recipe::Kind::DerivedArith);
  auto vx = x.rational_value(), vy = y.rational_value();
  if (vx && vy) {
    Rat r;
    switch (op) {
      case FieldOp::Add: r = *vx + *vy; break;
      case FieldOp::Sub: r = *vx - *vy; break;
      case FieldOp::Mul: r = *vx * *vy; break;
      case FieldOp::Div:
        if (*vy == 0) raise(Errc::DivisorNotSeparatedFromZero, "divisor is exactly zero");
        r = *vx / *vy;
        break;
    }
    return ExactReal(std::make_shared<detail::RationalNode>(r, rec ? rec : detail::rational_recipe(r)));
  }
  unsigned sep_prec = 0;
  long sep_min_exp = 0;
  if (op == FieldOp::Div) {
    auto sep = detail::separate_from_zero(y.node(), separation_budget, Errc::DivisorNotSeparatedFromZero);
    sep_prec = sep.prec;
    sep_min_exp = sep.min_exp;
  }
  return ExactReal(
      std::make_shared<detail::ArithNode>(op, x.node(), y.node(), rec, sep_prec, sep_min_exp));
}

ExactReal operator+(const ExactReal& x, const ExactReal& y) { return field_op(FieldOp::Add, x, y); }
ExactReal operator-(const ExactReal& x, const ExactReal& y) { return field_op(FieldOp::Sub, x, y); }
ExactReal operator*(const ExactReal& x, const ExactReal& y) { return field_op(FieldOp::Mul, x, y); }
ExactReal operator/(const ExactReal& x, const ExactReal& y) { return field_op(FieldOp::Div, x, y); }
ExactReal operator-(const ExactReal& x) { return field_op(FieldOp::Sub, ExactReal(Rat(0)), x); }

// ---------------------------------------------------------------------------
// exp
// ---------------------------------------------------------------------------

namespace detail {
namespace {

// Enclosure of e^a with width <= 2^-err_exp, by halving reduction and an
// interval Taylor sum whose terms are rounded to a dyadic grid.
QInterval exp_point_bounds(const Rat& a, long err_exp) {
  if (a == 0) return QInterval::point(Rat(1));
  long s = 0;
  Rat aa = abs(a);
  if (aa > Rat(1, 2)) s = ceil_log2(aa) + 1;
  // value magnitude: e^a <= 2^(3/2 a + 1) for a > 0, <= 1 otherwise
  long ai = a > 0 ? mpz_get_si(ceil_q(a).get_mpz_t()) : 0;
  long mag = a > 0 ? (3 * ai) / 2 + 2 : 1;
  long eps0 = err_exp + s * (mag + 1) + 4;
  long grid = eps0 + 8 + static_cast<long>(mpz_sizeinbase(Int(eps0 + 4).get_mpz_t(), 2));
  Rat u = a / pow2(s);

  QInterval term = QInterval::point(Rat(1));
  QInterval sum = term;
  Rat tol = pow2(-(eps0 + 2));
  for (unsigned long i = 1;; ++i) {
    term = round_out_dyadic(term * QInterval::point(u), grid);
    term = QInterval(term.lo / Rat(i), term.hi / Rat(i));
    term = round_out_dyadic(term, grid);
    sum = round_out_dyadic(sum + term, grid);
    Rat tmax = std::max(abs(term.lo), abs(term.hi));
    if (tmax <= tol) {
      // remainder of the series is bounded by the last |term| since |u| <= 1/2
      QInterval enc(sum.lo - tmax, sum.hi + tmax);
      for (long j = 0; j < s; ++j) {
        if (enc.lo <= 0) throw std::logic_error("exp enclosure lost positivity");
        enc = QInterval(enc.lo * enc.lo, enc.hi * enc.hi);
        enc = round_out_dyadic(enc, grid);
      }
      return enc;
    }
  }
}

class ExpNode final : public RealNode {
 public:
  ExpNode(NodePtr x, RecipePtr rec) : RealNode(std::move(rec)), x_(std::move(x)) {}

 protected:
  QInterval enclose(unsigned k) const override {
    long g = target(k);
    QInterval coarse = x_->refine(2);
    long ahi = mpz_get_si(ceil_q(coarse.hi).get_mpz_t());
    long mag = ahi <= 0 ? 1 : (3 * ahi) / 2 + 2;
    unsigned gx = static_cast<unsigned>(g + mag + 2);
    QInterval X = x_->refine(gx);
    QInterval lo_b = exp_point_bounds(X.lo, g + 2);
    QInterval hi_b = exp_point_bounds(X.hi, g + 2);
    return round_out_dyadic(QInterval(lo_b.lo, hi_b.hi), g + 4);
  }

 private:
  NodePtr x_;
};

// ---------------------------------------------------------------------------
// roots and rational powers
// ---------------------------------------------------------------------------

// floor(2^m * r^{1/q}) / 2^m for r >= 0; exact when the root is on the grid.
Rat kth_root_down(const Rat& r, unsigned long q, long m, bool* exact = nullptr) {
  Int scaled_num = r.get_num();
  mpz_mul_2exp(scaled_num.get_mpz_t(), scaled_num.get_mpz_t(), static_cast<unsigned long>(q * m));
  Int fl, rem;
  mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), r.get_den().get_mpz_t());
  Int t;
  int root_exact = mpz_root(t.get_mpz_t(), fl.get_mpz_t(), q);
  if (exact) *exact = root_exact != 0 && rem == 0;
  return Rat(t) * pow2(-m);
}

Rat kth_root_up(const Rat& r, unsigned long q, long m) {
  bool exact = false;
  Rat down = kth_root_down(r, q, m, &exact);
  return exact ? down : down + pow2(-m);
}

// directed bounds allowing negative r for odd q
Rat root_lower(const Rat& r, unsigned long q, long m) {
  if (r >= 0) return kth_root_down(r, q, m);
  return -kth_root_up(-r, q, m);
}
Rat root_upper(const Rat& r, unsigned long q, long m) {
  if (r >= 0) return kth_root_up(r, q, m);
  return -kth_root_down(-r, q, m);
}

QInterval int_pow_interval(const QInterval& J, unsigned long n) {
  if (n == 1) return J;
  Rat a = qpow(J.lo, static_cast<long>(n)), b = qpow(J.hi, static_cast<long>(n));
  if (n % 2 == 1) return QInterval(a, b);
  if (J.lo >= 0) return QInterval(a, b);
  if (J.hi <= 0) return QInterval(b, a);
  return QInterval(Rat(0), std::max(a, b));
}

class PowNode final : public RealNode {
 public:
  PowNode(NodePtr x, Rat r, RecipePtr rec, unsigned sep_prec, long sep_min_exp)
      : RealNode(std::move(rec)),
        x_(std::move(x)),
        r_(std::move(r)),
        sep_prec_(sep_prec),
        sep_min_exp_(sep_min_exp) {}

 protected:
  QInterval enclose(unsigned k) const override {
    long g = target(k);
    unsigned long q = mpz_get_ui(r_.get_den().get_mpz_t());
    long p = mpz_get_si(r_.get_num().get_mpz_t());
    unsigned long ap = static_cast<unsigned long>(p > 0 ? p : -p);

    QInterval coarse = x_->refine(2);
    long mx = mag_exp(coarse);
    long mr = mx == kZeroMag ? 0 : (mx >= 0 ? mx / static_cast<long>(q) + 1 : 0);
    long pw_bits = static_cast<long>(mpz_sizeinbase(Int(static_cast<long>(ap)).get_mpz_t(), 2));
    long groot = g + 3 + pw_bits + static_cast<long>(ap - 1) * pos(mr);
    if (p < 0) groot += pos(-2 * (sep_min_exp_ / static_cast<long>(q) - 1)) + 2;
    unsigned gx = static_cast<unsigned>(q) * static_cast<unsigned>(groot + 1);
    if (p < 0) gx = std::max(gx, sep_prec_);
    QInterval X = x_->refine(gx);

    if (q % 2 == 0) {
      if (X.hi < 0) raise(Errc::DomainError, "even root of certified-negative value");
      if (X.lo < 0) X = QInterval(Rat(0), X.hi);
    }
    QInterval R(root_lower(X.lo, q, groot), root_upper(X.hi, q, groot));
    if (p > 0) return int_pow_interval(R, ap);
    QInterval P = int_pow_interval(R, ap);
    return recip(P);
  }

 private:
  NodePtr x_;
  Rat r_;
  unsigned sep_prec_;
  long sep_min_exp_;
};

// Eagerly certify a sign constraint, tolerating an undecided straddle (the
// enclosure logic stays sound; a certified violation raises later).
void precheck_nonnegative(const NodePtr& x, unsigned budget) {
  unsigned k = 0;
  for (;;) {
    QInterval J = x->refine(k);
    if (J.lo >= 0) return;
    if (J.hi < 0) raise(Errc::DomainError, "operand certified negative");
    if (k >= budget) return;
    k = k == 0 ? 4 : std::min(budget, k * 2);
  }
}

}  // namespace
}  // namespace detail

ExactReal exp(const ExactReal& x) {
  RecipePtr rec = detail::derived_recipe("exp", {x.recipe()}, Recipe::Kind::Elementary);
  if (auto v = x.rational_value(); v && *v == 0)
    return ExactReal(std::make_shared<detail::RationalNode>(Rat(1), rec));
  return ExactReal(std::make_shared<detail::ExpNode>(x.node(), rec));
}

ExactReal sqrt(const ExactReal& x) { return pow_rational(x, Rat(1, 2)); }

ExactReal pow_rational(const ExactReal& x, const Rat& r) {
  if (r == 0) raise(Errc::DomainError, "pow_rational with zero exponent");
  if (!mpz_fits_slong_p(r.get_num().get_mpz_t()) || !mpz_fits_ulong_p(r.get_den().get_mpz_t()) ||
      abs(r.get_num()) > 1000000 || r.get_den() > 1000000)
    raise(Errc::BudgetExceeded, "pow_rational exponent too large");
  const char* opn = r == Rat(1, 2) ? "sqrt" : "pow";
  RecipePtr rec = detail::derived_recipe(opn, {x.recipe()}, Recipe::Kind::Elementary, r);
  unsigned long q = mpz_get_ui(r.get_den().get_mpz_t());
  long p = mpz_get_si(r.get_num().get_mpz_t());

  if (auto v = x.rational_value()) {
    if (*v == 0) {
      if (p < 0) raise(Errc::NotSeparatedFromZero, "zero base with negative exponent");
      return ExactReal(std::make_shared<detail::RationalNode>(Rat(0), rec));
    }
    if (*v < 0 && q % 2 == 0) raise(Errc::DomainError, "even root of negative rational");
    bool neg = *v < 0;
    auto rn = exact_kth_root(abs(v->get_num()), q);
    auto rd = exact_kth_root(v->get_den(), q);
    if (rn && rd) {
      Rat root(neg ? -*rn : *rn, *rd);
      root.canonicalize();
      return ExactReal(std::make_shared<detail::RationalNode>(qpow(root, p), rec));
    }
  }
  unsigned sep_prec = 0;
  long sep_min_exp = 0;
  if (p < 0) {
    auto sep = detail::separate_from_zero(x.node(), kDivSeparationBudget, Errc::NotSeparatedFromZero);
    sep_prec = sep.prec;
    sep_min_exp = sep.min_exp;
  }
  if (q % 2 == 0) detail::precheck_nonnegative(x.node(), 256);
  return ExactReal(std::make_shared<detail::PowNode>(x.node(), r, rec, sep_prec, sep_min_exp));
}

// ---------------------------------------------------------------------------
// series constants
// ---------------------------------------------------------------------------

void ScheduleSpec::validate() const {
  if (kind != Kind::Custom) return;
  if (prefix.empty()) raise(Errc::InvalidSchedule, "custom schedule needs a nonempty prefix");
  unsigned long prev = 0;
  for (unsigned long e : prefix) {
    if (e <= prev) raise(Errc::InvalidSchedule, "schedule exponents must be strictly increasing");
    prev = e;
  }
}

Int ScheduleSpec::exponent(unsigned long k) const {
  if (k == 0) raise(Errc::InvalidSchedule, "schedule index starts at 1");
  switch (kind) {
    case Kind::Factorial: {
      Int e = 1;
      for (unsigned long i = 2; i <= k; ++i) e *= static_cast<unsigned long>(i);
      return e;
    }
    case Kind::DoubleExponential: {
      if (k > 40) raise(Errc::BudgetExceeded, "double-exponential schedule exponent too large");
      Int e = 1;
      mpz_mul_2exp(e.get_mpz_t(), e.get_mpz_t(), 1UL << k);
      return e;
    }
    case Kind::Custom: {
      if (k <= prefix.size()) return Int(prefix[k - 1]);
      Int e(prefix.back());
      for (unsigned long i = prefix.size() + 1; i <= k; ++i) e *= static_cast<unsigned long>(i);
      return e;
    }
  }
  raise(Errc::InvalidSchedule, "unreachable schedule kind");
}

void DigitSpec::validate(int base) const {
  if (kind == Kind::Ones) return;
  if (pattern.empty()) raise(Errc::InvalidSchedule, "empty digit pattern");
  bool nonzero = false;
  for (int d : pattern) {
    if (d < 0 || d >= base) raise(Errc::InvalidSchedule, "digit out of range for base");
    nonzero = nonzero || d != 0;
  }
  if (!nonzero) raise(Errc::InvalidSchedule, "digit rule must be nonzero infinitely often");
}

int DigitSpec::digit(unsigned long k) const {
  if (kind == Kind::Ones) return 1;
  return pattern[(k - 1) % pattern.size()];
}

int DigitSpec::max_digit() const {
  if (kind == Kind::Ones) return 1;
  return *std::max_element(pattern.begin(), pattern.end());
}

unsigned long DigitSpec::next_nonzero_at_or_after(unsigned long k) const {
  if (kind == Kind::Ones) return k;
  for (unsigned long i = k;; ++i)
    if (digit(i) != 0) return i;
}

void SeriesSpec::validate() const {
  if (base < 2) raise(Errc::InvalidSchedule, "series base must be >= 2");
  schedule.validate();
  digits.validate(base);
}

namespace detail {

namespace {
RecipePtr series_recipe(const SeriesSpec& spec) {
  auto r = std::make_shared<Recipe>();
  r->kind = Recipe::Kind::Series;
  r->series = spec;
  return r;
}
}  // namespace

SeriesNode::SeriesNode(SeriesSpec spec) : RealNode(series_recipe(spec)), spec_(std::move(spec)) {
  spec_.validate();
  fb_ = floor_log2(Rat(spec_.base));
  smargin_ = ceil_log2(Rat(spec_.digits.max_digit()) * Rat(spec_.base) / Rat(spec_.base - 1));
}

Int SeriesNode::exponent(unsigned long k) const {
  std::scoped_lock lock(smu_);
  while (exps_.size() < k) exps_.push_back(spec_.schedule.exponent(exps_.size() + 1));
  return exps_[k - 1];
}

Rat SeriesNode::base_pow_neg(const Int& e) const {
  if (!mpz_fits_ulong_p(e.get_mpz_t()) || e > 2000000)
    raise(Errc::BudgetExceeded, "series exponent too large to materialize");
  Rat r(Int(1), ipow(Int(spec_.base), mpz_get_ui(e.get_mpz_t())));
  r.canonicalize();
  return r;
}

Rat SeriesNode::partial_sum(unsigned long K) const {
  {
    std::scoped_lock lock(smu_);
    if (sums_.empty()) sums_.push_back(Rat(0));
  }
  for (unsigned long i = sums_.size(); i <= K; ++i) {
    Int e = exponent(i);
    Rat term = Rat(spec_.digits.digit(i)) * base_pow_neg(e);
    std::scoped_lock lock(smu_);
    if (sums_.size() == i) sums_.push_back(sums_.back() + term);
  }
  std::scoped_lock lock(smu_);
  return sums_[K];
}

Rat SeriesNode::tail_upper(unsigned long K) const {
  Int e = exponent(K + 1);
  return Rat(spec_.digits.max_digit()) * Rat(spec_.base) / Rat(spec_.base - 1) * base_pow_neg(e);
}

Rat SeriesNode::tail_lower(unsigned long K) const {
  unsigned long kp = spec_.digits.next_nonzero_at_or_after(K + 1);
  return Rat(spec_.digits.digit(kp)) * base_pow_neg(exponent(kp));
}

std::optional<std::pair<Int, Int>> SeriesNode::witness_for_level(unsigned n) const {
  for (unsigned long K = std::max<unsigned long>(1, n); K <= static_cast<unsigned long>(n) + 64; ++K) {
    Int e = exponent(K);
    if (!mpz_fits_ulong_p(e.get_mpz_t()) || e > 2000000)
      raise(Errc::BudgetExceeded, "series witness denominator too large");
    Int q = ipow(Int(spec_.base), mpz_get_ui(e.get_mpz_t()));
    if (q < 2) continue;
    if (tail_upper(K) > qpow(Rat(q), -static_cast<long>(n))) continue;
    Rat pq = partial_sum(K) * Rat(q);
    if (pq.get_den() != 1) throw std::logic_error("series truncation numerator not integral");
    return std::make_pair(Int(pq.get_num()), q);
  }
  return std::nullopt;
}

QInterval SeriesNode::enclose(unsigned k) const {
  long g = target(k);
  // smallest K with  e_{K+1} * floor(log2 b) - smargin >= g, so that
  // tail_upper(K) <= 2^-g
  unsigned long K = 0;
  while (exponent(K + 1) * fb_ - smargin_ < g) ++K;
  Rat s = partial_sum(K);
  // dyadic overbound of the exact tail keeps endpoint sizes linear in g
  Int e = exponent(K + 1);
  long bexp = mpz_fits_slong_p(e.get_mpz_t()) ? mpz_get_si(e.get_mpz_t()) : 0;
  if (bexp == 0) raise(Errc::BudgetExceeded, "series exponent too large");
  Rat bound = pow2(smargin_ - bexp * fb_);
  return QInterval(s, s + bound);
}

}  // namespace detail

ExactReal make_series(const SeriesSpec& spec) {
  spec.validate();
  return ExactReal(std::make_shared<detail::SeriesNode>(spec));
}

// ---------------------------------------------------------------------------
// || q x ||
// ---------------------------------------------------------------------------

QInterval nearest_int_dist(const Int& q, const Rat& x) {
  if (q < 2) raise(Errc::DomainError, "nearest_int_dist requires q >= 2");
  Rat d = Rat(q) * x;
  Rat f = d - Rat(round_q(d));
  return QInterval::point(abs(f));
}

QInterval nearest_int_dist(const Int& q, const ExactReal& x, unsigned k) {
  if (q < 2) raise(Errc::DomainError, "nearest_int_dist requires q >= 2");
  if (auto v = x.rational_value()) return nearest_int_dist(q, *v);
  long qb = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
  QInterval J = x.refine(k + static_cast<unsigned>(qb) + 1);
  return nearest_int_dist_image(Rat(q) * J);
}

Int nearest_int(const Int& q, const ExactReal& x, unsigned budget) {
  if (q < 2) raise(Errc::DomainError, "nearest_int requires q >= 2");
  unsigned k = 0;
  for (;;) {
    QInterval D = Rat(q) * x.refine(k);
    Int m = round_q(D.mid());
    if (D.lo > Rat(m) - Rat(1, 2) && D.hi < Rat(m) + Rat(1, 2)) return m;
    if (k >= budget)
      raise(Errc::AmbiguousNearestInteger, "q*x straddles a half-integer at precision " + std::to_string(budget));
    k = k == 0 ? 4 : std::min(budget, k * 2);
  }
}

// ---------------------------------------------------------------------------
// certified comparisons
// ---------------------------------------------------------------------------

std::optional<int> try_sign(const ExactReal& x, unsigned max_prec) {
  unsigned k = 0;
  for (;;) {
    QInterval J = x.refine(k);
    if (J.lo > 0) return 1;
    if (J.hi < 0) return -1;
    if (J.is_point()) return 0;
    if (k >= max_prec) return std::nullopt;
    k = k == 0 ? 4 : std::min(max_prec, k * 2);
  }
}

Cmp compare(const ExactReal& x, const Rat& c, unsigned max_prec) {
  unsigned k = 0;
  for (;;) {
    QInterval J = x.refine(k);
    if (J.hi < c) return Cmp::Less;
    if (J.lo > c) return Cmp::Greater;
    if (J.is_point() && J.lo == c) return Cmp::Equal;
    if (k >= max_prec)
      raise(Errc::RefinementBudgetExceeded, "comparison undecided at precision " + std::to_string(max_prec));
    k = k == 0 ? 4 : std::min(max_prec, k * 2);
  }
}

bool check_approx_error(const ExactReal& x, const Rat& center, const Rat& bound, bool closed,
                        unsigned max_prec) {
  unsigned k = 0;
  for (;;) {
    QInterval J = x.refine(k);
    QInterval A = abs_image(QInterval(J.lo - center, J.hi - center));
    // positivity 0 < |x - center|
    bool pos_true = A.lo > 0;
    bool pos_false = A.is_point() && A.hi == 0;
    // bound comparison
    bool bnd_true = closed ? A.hi <= bound : A.hi < bound;
    bool bnd_false = closed ? A.lo > bound : A.lo >= bound;
    if (pos_false || bnd_false) return false;
    if (pos_true && bnd_true) return true;
    if (k >= max_prec)
      raise(Errc::RefinementBudgetExceeded, "witness check undecided at precision " + std::to_string(max_prec));
    k = k == 0 ? 8 : std::min(max_prec, k * 2);
  }
}

}  // namespace liouville
