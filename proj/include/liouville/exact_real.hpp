#ifndef LIOUVILLE_EXACT_REAL_HPP
#define LIOUVILLE_EXACT_REAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liouville/detail/real_node.hpp"
#include "liouville/interval.hpp"

namespace liouville {

// ---------------------------------------------------------------------------
// Construction provenance
// ---------------------------------------------------------------------------

// Exponent schedule e_1 < e_2 < ... with e_{k+1}/e_k -> infinity. Custom
// schedules give an explicit prefix and then continue factorially
// (e_{k+1} = (k+1) e_k), which preserves both properties.
struct ScheduleSpec {
  enum class Kind { Factorial, DoubleExponential, Custom };
  Kind kind = Kind::Factorial;
  std::vector<unsigned long> prefix;

  void validate() const;  // raises InvalidSchedule
  Int exponent(unsigned long k) const;  // k >= 1
};

// Digit rule k |-> a_k in [0, base): built-in rules only, all of which are
// nonzero infinitely often by construction.
struct DigitSpec {
  enum class Kind { Ones, Pattern };
  Kind kind = Kind::Ones;
  std::vector<int> pattern;  // cycled

  void validate(int base) const;  // raises InvalidSchedule
  int digit(unsigned long k) const;
  int max_digit() const;
  unsigned long next_nonzero_at_or_after(unsigned long k) const;
};

struct SeriesSpec {
  int base = 10;
  ScheduleSpec schedule;
  DigitSpec digits;
  void validate() const;
};

// Reproducibility record: everything needed to rebuild a value from scratch.
struct Recipe {
  enum class Kind {
    Rational,
    Series,
    DerivedArith,  // op in {add, sub, mul, div}, two children
    Elementary,    // op in {exp, sqrt, pow}, one child, pow carries `value`
    SplitSum,      // child = t, part selects xi/eta
    SplitProd,     // child = t, part selects xi/eta
    Steered,       // map_specs, interval = I0, level = N, seed
    MapEval,       // map_specs[0] applied to children[0]; part = map index
  };
  Kind kind = Kind::Rational;
  Rat value;
  SeriesSpec series;
  std::string op;
  std::vector<RecipePtr> children;
  std::vector<std::string> map_specs;
  QInterval interval;
  int level = 0;
  unsigned long seed = 0;
  int part = 0;
};

// ---------------------------------------------------------------------------
// ExactReal
// ---------------------------------------------------------------------------

// A real number as a refinable nested-interval process: refine(k) returns a
// rational-endpoint enclosure of width <= 2^-k with refine(k+1) inside
// refine(k), deterministically. Immutable and cheap to copy (shared node).
class ExactReal {
 public:
  ExactReal() : ExactReal(Rat(0)) {}
  explicit ExactReal(const Rat& v);
  explicit ExactReal(long v) : ExactReal(Rat(v)) {}
  explicit ExactReal(detail::NodePtr node) : node_(std::move(node)) {}

  QInterval refine(unsigned k) const { return node_->refine(k); }
  const RecipePtr& recipe() const { return node_->recipe(); }

  // Exact rational value when the process is known to be a point.
  std::optional<Rat> rational_value() const { return node_->rational_value(); }

  const detail::NodePtr& node() const { return node_; }

 private:
  detail::NodePtr node_;
};

inline QInterval refine(const ExactReal& x, unsigned k) { return x.refine(k); }

// ---------------------------------------------------------------------------
// Field operations
// ---------------------------------------------------------------------------

// Division certifies a zero-separating interval of y by refining up to
// `separation_budget` bits before failing (DivisorNotSeparatedFromZero).
inline constexpr unsigned kDivSeparationBudget = 256;

enum class FieldOp { Add, Sub, Mul, Div };

ExactReal field_op(FieldOp op, const ExactReal& x, const ExactReal& y,
                   unsigned separation_budget = kDivSeparationBudget);

ExactReal operator+(const ExactReal& x, const ExactReal& y);
ExactReal operator-(const ExactReal& x, const ExactReal& y);
ExactReal operator*(const ExactReal& x, const ExactReal& y);
ExactReal operator/(const ExactReal& x, const ExactReal& y);
ExactReal operator-(const ExactReal& x);

// ---------------------------------------------------------------------------
// Elementary functions
// ---------------------------------------------------------------------------

// exp via halving argument reduction + Taylor with factorial tail bound;
// sqrt and rational powers via exact integer root extraction on dyadic grids.
ExactReal exp(const ExactReal& x);
ExactReal sqrt(const ExactReal& x);
ExactReal pow_rational(const ExactReal& x, const Rat& r);

// ---------------------------------------------------------------------------
// Series constants  (Sum_k a_k b^{-e_k})
// ---------------------------------------------------------------------------

ExactReal make_series(const SeriesSpec& spec);

// ---------------------------------------------------------------------------
// ||q x||: certified distance of q*x to the nearest integer
// ---------------------------------------------------------------------------

// Exact point value for rational x.
QInterval nearest_int_dist(const Int& q, const Rat& x);
// Enclosure of width <= 2^-k for general x (monotone shrinking in k).
QInterval nearest_int_dist(const Int& q, const ExactReal& x, unsigned k);
// The unique nearest integer to q*x, refining until q*x certifiably excludes
// every half-integer; raises AmbiguousNearestInteger at the budget.
Int nearest_int(const Int& q, const ExactReal& x, unsigned budget = 1024);

// ---------------------------------------------------------------------------
// Certified comparisons
// ---------------------------------------------------------------------------

inline constexpr unsigned kDefaultCompareBudget = 1024;

// Sign of x: +1/-1 once certified, 0 only when x collapses to the exact
// point 0; nullopt if undecided within max_prec.
std::optional<int> try_sign(const ExactReal& x, unsigned max_prec);

enum class Cmp { Less, Equal, Greater };

// Decide x <=> c. Equal is reported only when x collapses to the point c.
// Raises RefinementBudgetExceeded if undecidable within the budget.
Cmp compare(const ExactReal& x, const Rat& c, unsigned max_prec = kDefaultCompareBudget);

// Decide |x - p/q| <= bound (closed = true) or < bound (closed = false),
// together with positivity 0 < |x - p/q|. Used by certificate checking.
bool check_approx_error(const ExactReal& x, const Rat& center, const Rat& bound,
                        bool closed, unsigned max_prec);

}  // namespace liouville

#endif  // LIOUVILLE_EXACT_REAL_HPP
