#include "liouville/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "liouville/detail/real_node.hpp"

namespace liouville {
namespace detail {

struct MapNode {
  enum class Kind {
    Identity,
    AddConst,
    SubFrom,
    Scale,
    RecipScale,
    SqrtDiff,
    ExpScale,
    Pow,
    Implicit,
    Compose,
    Inverse,
  };
  Kind kind = Kind::Identity;
  ExactReal t{Rat(0)};
  Rat r;
  BivarPolyQ P;
  QInterval x_domain, y_range;  // implicit curve data
  MapPtr a, b;                  // compose: a after b; inverse: a
  std::optional<QInterval> domain;
  int dir = 1;
  std::optional<std::string> spec;
};

ExactReal apply_map_node(const MapPtr& node, const ExactReal& x);

namespace {

int certified_sign(const ExactReal& x, unsigned budget, Errc code, const char* what) {
  auto s = try_sign(x, budget);
  if (!s || *s == 0) raise(code, std::string(what) + " must be separated from zero");
  return *s;
}

int interval_sign(const QInterval& J) {
  if (J.lo > 0) return 1;
  if (J.hi < 0) return -1;
  return 0;
}

std::optional<std::string> param_spec(const char* name, const ExactReal& t) {
  auto v = value_expr_string(t.recipe());
  if (!v) return std::nullopt;
  return std::string(name) + ":" + *v;
}

// sign of P(x, y0) for fixed rational y0, refining x adaptively
int sign_of_slice(const BivarPolyQ& P, const NodePtr& x, const Rat& y0, unsigned hard_budget) {
  for (unsigned kk = 16;; kk *= 2) {
    QInterval I = P.eval_interval(x->refine(kk), QInterval::point(y0));
    int s = interval_sign(I);
    if (s != 0) return s;
    if (I.is_point()) return 0;
    if (kk >= hard_budget)
      raise(Errc::BudgetExceeded,
            "sign of implicit slice undecided at precision " + std::to_string(hard_budget));
  }
}

// y in y_range with P(x, y) = 0, by bisection (P_y sign-definite on the box)
class ImplicitRootNode final : public RealNode {
 public:
  ImplicitRootNode(BivarPolyQ P, QInterval y_range, NodePtr x)
      : P_(std::move(P)), x_(std::move(x)), lo_(y_range.lo), hi_(y_range.hi) {}

 protected:
  QInterval enclose(unsigned k) const override {
    Rat goal = pow2(-static_cast<long>(target(k)) - 1);
    if (point_) return QInterval::point(*point_);
    if (s_lo_ == 0) {
      s_lo_ = sign_of_slice(P_, x_, lo_, kHardBudget);
      int s_hi = sign_of_slice(P_, x_, hi_, kHardBudget);
      if (s_lo_ == 0) {
        point_ = lo_;
        return QInterval::point(lo_);
      }
      if (s_hi == 0) {
        point_ = hi_;
        return QInterval::point(hi_);
      }
      if (s_lo_ == s_hi) raise(Errc::NoRootInJ, "no sign change across the y-range");
    }
    while (hi_ - lo_ > goal && !point_) {
      Rat mid = (lo_ + hi_) / 2;
      int s = 0;
      try {
        s = sign_of_slice(P_, x_, mid, kSoftBudget);
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExceeded) throw;
        // the midpoint may sit on the curve: retry off-center
        mid = lo_ + (hi_ - lo_) * Rat(7, 16);
        s = sign_of_slice(P_, x_, mid, kHardBudget);
      }
      if (s == 0) {
        point_ = mid;
        return QInterval::point(mid);
      }
      if (s == s_lo_)
        lo_ = mid;
      else
        hi_ = mid;
    }
    return QInterval(lo_, hi_);
  }

 private:
  static constexpr unsigned kSoftBudget = 1u << 12;
  static constexpr unsigned kHardBudget = 1u << 22;
  BivarPolyQ P_;
  NodePtr x_;
  mutable Rat lo_, hi_;
  mutable int s_lo_ = 0;
  mutable std::optional<Rat> point_;
};

// u in the forward map's domain with fwd(u) = y
class InverseEvalNode final : public RealNode {
 public:
  InverseEvalNode(MapPtr fwd, NodePtr y, QInterval bracket)
      : fwd_(std::move(fwd)), y_(std::move(y)), lo_(bracket.lo), hi_(bracket.hi) {}

 protected:
  QInterval enclose(unsigned k) const override {
    Rat goal = pow2(-static_cast<long>(target(k)) - 1);
    if (point_) return QInterval::point(*point_);
    if (s_lo_ == 0) {
      s_lo_ = diff_sign(lo_, kHardBudget);
      int s_hi = diff_sign(hi_, kHardBudget);
      if (s_lo_ == 0) {
        point_ = lo_;
        return QInterval::point(lo_);
      }
      if (s_hi == 0) {
        point_ = hi_;
        return QInterval::point(hi_);
      }
      if (s_lo_ == s_hi)
        raise(Errc::DomainEscape, "inverse target not bracketed by the map's domain");
    }
    while (hi_ - lo_ > goal && !point_) {
      Rat mid = (lo_ + hi_) / 2;
      int s = 0;
      try {
        s = diff_sign(mid, kSoftBudget);
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExceeded) throw;
        mid = lo_ + (hi_ - lo_) * Rat(7, 16);
        s = diff_sign(mid, kHardBudget);
      }
      if (s == 0) {
        point_ = mid;
        return QInterval::point(mid);
      }
      if (s == s_lo_)
        lo_ = mid;
      else
        hi_ = mid;
    }
    return QInterval(lo_, hi_);
  }

 private:
  int diff_sign(const Rat& u, unsigned budget) const {
    ExactReal diff = apply_map_node(fwd_, ExactReal(u)) - ExactReal(NodePtr(y_));
    auto s = try_sign(diff, budget);
    if (!s) raise(Errc::BudgetExceeded, "inverse bisection sign undecided");
    return *s;
  }

  static constexpr unsigned kSoftBudget = 1u << 12;
  static constexpr unsigned kHardBudget = 1u << 22;
  MapPtr fwd_;
  NodePtr y_;
  mutable Rat lo_, hi_;
  mutable int s_lo_ = 0;
  mutable std::optional<Rat> point_;
};

}  // namespace

ExactReal apply_map_node(const MapPtr& node, const ExactReal& x) {
  using K = MapNode::Kind;
  switch (node->kind) {
    case K::Identity: return x;
    case K::AddConst: return node->t + x;
    case K::SubFrom: return node->t - x;
    case K::Scale: return node->t * x;
    case K::RecipScale: return node->t / x;
    case K::SqrtDiff: return sqrt(node->t - x * x);
    case K::ExpScale: return exp(node->t * x);
    case K::Pow: return pow_rational(x, node->r);
    case K::Implicit:
      return ExactReal(std::make_shared<ImplicitRootNode>(node->P, node->y_range, x.node()));
    case K::Compose: return apply_map_node(node->a, apply_map_node(node->b, x));
    case K::Inverse: {
      if (!node->a->domain)
        raise(Errc::DomainError, "inverse requires the forward map to carry a bounded domain");
      return ExactReal(std::make_shared<InverseEvalNode>(node->a, x.node(), *node->a->domain));
    }
  }
  raise(Errc::DomainError, "unreachable map kind");
}

// outer enclosure of f over I from endpoint evaluations
static QInterval outer_image(const MapPtr& node, const QInterval& I, unsigned prec) {
  QInterval a = apply_map_node(node, ExactReal(I.lo)).refine(prec);
  QInterval b = apply_map_node(node, ExactReal(I.hi)).refine(prec);
  return QInterval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

static void check_map_domain(const MapPtr& node, const QInterval& I) {
  using K = MapNode::Kind;
  if (node->domain && !node->domain->contains(I))
    raise(Errc::DomainEscape, "steering interval escapes the map domain " + node->domain->str());
  switch (node->kind) {
    case K::Identity:
    case K::AddConst:
    case K::SubFrom:
    case K::Scale:
    case K::ExpScale:
      return;
    case K::RecipScale:
      if (!I.excludes(0)) raise(Errc::DomainEscape, "reciprocal map over an interval containing 0");
      return;
    case K::SqrtDiff: {
      if (I.lo <= 0) raise(Errc::DomainEscape, "sqrt_diff steering requires a positive interval");
      Rat m2 = std::max(abs(I.lo), abs(I.hi));
      m2 = m2 * m2;
      if (compare(node->t, m2, 1024) != Cmp::Greater)
        raise(Errc::DomainEscape, "t - x^2 not positive over the interval");
      return;
    }
    case K::Pow:
      if (I.lo <= 0) raise(Errc::DomainEscape, "pow map requires a positive interval");
      return;
    case K::Implicit:
      return;  // domain containment checked above via node->domain
    case K::Compose:
      check_map_domain(node->b, I);
      check_map_domain(node->a, outer_image(node->b, I, 64));
      return;
    case K::Inverse: {
      const QInterval& D = *node->a->domain;
      QInterval fa = apply_map_node(node->a, ExactReal(D.lo)).refine(64);
      QInterval fb = apply_map_node(node->a, ExactReal(D.hi)).refine(64);
      // inner image: between the certified endpoint enclosures
      Rat lo = node->a->dir > 0 ? fa.hi : fb.hi;
      Rat hi = node->a->dir > 0 ? fb.lo : fa.lo;
      if (lo > hi || !(lo <= I.lo && I.hi <= hi))
        raise(Errc::DomainEscape, "interval not certified inside the forward image");
      return;
    }
  }
}

}  // namespace detail

using detail::MapNode;
using detail::MapPtr;

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

namespace {

std::shared_ptr<MapNode> new_node(MapNode::Kind kind) {
  auto n = std::make_shared<MapNode>();
  n->kind = kind;
  return n;
}

}  // namespace

CatalogMap CatalogMap::identity() {
  auto n = new_node(MapNode::Kind::Identity);
  n->spec = "id";
  return CatalogMap(n);
}

CatalogMap CatalogMap::add_const(const ExactReal& t) {
  auto n = new_node(MapNode::Kind::AddConst);
  n->t = t;
  n->spec = detail::param_spec("add", t);
  return CatalogMap(n);
}

CatalogMap CatalogMap::sub_from(const ExactReal& t) {
  auto n = new_node(MapNode::Kind::SubFrom);
  n->t = t;
  n->dir = -1;
  n->spec = detail::param_spec("sub", t);
  return CatalogMap(n);
}

CatalogMap CatalogMap::scale(const ExactReal& t) {
  auto n = new_node(MapNode::Kind::Scale);
  n->t = t;
  n->dir = detail::certified_sign(t, 256, Errc::NotSeparatedFromZero, "scale factor");
  n->spec = detail::param_spec("scale", t);
  return CatalogMap(n);
}

CatalogMap CatalogMap::reciprocal_scale(const ExactReal& t) {
  auto n = new_node(MapNode::Kind::RecipScale);
  n->t = t;
  n->dir = -detail::certified_sign(t, 256, Errc::NotSeparatedFromZero, "reciprocal scale factor");
  n->spec = detail::param_spec("recip", t);
  return CatalogMap(n);
}

CatalogMap CatalogMap::sqrt_diff(const ExactReal& t) {
  auto n = new_node(MapNode::Kind::SqrtDiff);
  n->t = t;
  if (detail::certified_sign(t, 256, Errc::DomainError, "sqrt_diff parameter") < 0)
    raise(Errc::DomainError, "sqrt_diff requires t > 0");
  n->dir = -1;  // positive-side branch
  n->spec = detail::param_spec("sqrtdiff", t);
  return CatalogMap(n);
}

CatalogMap CatalogMap::exp_scale(const ExactReal& t) {
  auto n = new_node(MapNode::Kind::ExpScale);
  n->t = t;
  n->dir = detail::certified_sign(t, 256, Errc::NotSeparatedFromZero, "exp_scale factor");
  n->spec = detail::param_spec("expscale", t);
  return CatalogMap(n);
}

CatalogMap CatalogMap::pow_map(const Rat& r) {
  if (r == 0) raise(Errc::DomainError, "pow map requires a nonzero exponent");
  auto n = new_node(MapNode::Kind::Pow);
  n->r = r;
  n->dir = r > 0 ? 1 : -1;
  n->spec = "pow:" + to_string(r);
  return CatalogMap(n);
}

CatalogMap CatalogMap::implicit_curve(const BivarPolyQ& P, const QInterval& x_domain,
                                      const QInterval& y_range) {
  if (P.is_constant()) raise(Errc::ConstantF, "implicit curve needs a nonconstant polynomial");
  int sy = detail::interval_sign(P.dy().eval_interval(x_domain, y_range));
  if (sy == 0) raise(Errc::NonMonotoneSlice, "dP/dy not sign-definite over the box");
  int sx = detail::interval_sign(P.dx().eval_interval(x_domain, y_range));
  if (sx == 0) raise(Errc::NonMonotoneSlice, "dP/dx not sign-definite over the box");
  int s_bottom = detail::interval_sign(P.eval_interval(x_domain, QInterval::point(y_range.lo)));
  int s_top = detail::interval_sign(P.eval_interval(x_domain, QInterval::point(y_range.hi)));
  if (s_bottom == 0 || s_top == 0 || s_bottom == s_top)
    raise(Errc::NoRootInJ, "P does not change sign across the y-range");
  auto n = new_node(MapNode::Kind::Implicit);
  n->P = P;
  n->x_domain = x_domain;
  n->y_range = y_range;
  n->domain = x_domain;
  n->dir = -sx * sy;
  n->spec = "implicit(" + P.str() + ";" + to_string(x_domain.lo) + ";" + to_string(x_domain.hi) +
            ";" + to_string(y_range.lo) + ";" + to_string(y_range.hi) + ")";
  return CatalogMap(n);
}

CatalogMap CatalogMap::composed_with(const CatalogMap& inner) const {
  auto n = new_node(MapNode::Kind::Compose);
  n->a = node_;
  n->b = inner.node_;
  n->dir = node_->dir * inner.node_->dir;
  n->domain = inner.node_->domain;
  if (node_->spec && inner.node_->spec) n->spec = *node_->spec + "." + *inner.node_->spec;
  return CatalogMap(n);
}

CatalogMap CatalogMap::inverse() const {
  if (!node_->domain)
    raise(Errc::DomainError, "inverse requires the forward map to carry a bounded domain");
  auto n = new_node(MapNode::Kind::Inverse);
  n->a = node_;
  n->dir = node_->dir;
  if (node_->spec) n->spec = "inv(" + *node_->spec + ")";
  return CatalogMap(n);
}

CatalogMap CatalogMap::restricted(const QInterval& domain) const {
  auto n = std::make_shared<MapNode>(*node_);
  if (n->domain) {
    auto meet = intersect(*n->domain, domain);
    if (!meet) raise(Errc::DomainEscape, "restriction disjoint from existing domain");
    n->domain = *meet;
  } else {
    n->domain = domain;
  }
  return CatalogMap(n);
}

int CatalogMap::direction() const { return node_->dir; }
const std::optional<QInterval>& CatalogMap::domain() const { return node_->domain; }
std::optional<std::string> CatalogMap::spec_string() const { return node_->spec; }

ExactReal CatalogMap::apply(const ExactReal& x) const { return detail::apply_map_node(node_, x); }

void CatalogMap::check_domain(const QInterval& I) const { detail::check_map_domain(node_, I); }

// ---------------------------------------------------------------------------
// value expression grammar
// ---------------------------------------------------------------------------

namespace {

struct ValueParser {
  const std::string& src;
  size_t pos = 0;

  explicit ValueParser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      raise(Errc::ParseError, std::string("expected '") + c + "' in value expression: " + src);
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos]))) ++pos;
    return src.substr(start, pos - start);
  }

  Int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < src.size() && src[pos] == '-') ++pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (start == pos || (src[start] == '-' && pos == start + 1))
      raise(Errc::ParseError, "expected integer in value expression: " + src);
    return Int(src.substr(start, pos - start));
  }

  Rat rational() {
    Int num = integer();
    if (consume('/')) {
      Int den = integer();
      if (den == 0) raise(Errc::ParseError, "zero denominator");
      Rat q(num, den);
      q.canonicalize();
      return q;
    }
    return Rat(num);
  }

  std::vector<unsigned long> int_list() {
    expect('[');
    std::vector<unsigned long> out;
    do {
      Int v = integer();
      if (v < 0 || !mpz_fits_ulong_p(v.get_mpz_t()))
        raise(Errc::ParseError, "schedule entries must be nonnegative integers");
      out.push_back(mpz_get_ui(v.get_mpz_t()));
    } while (consume(','));
    expect(']');
    return out;
  }

  ExactReal atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      ExactReal v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ExactReal(rational());
    std::string name = ident();
    if (name.empty())
      raise(Errc::ParseError, std::string("unexpected character '") + c + "' in value expression");
    if (name == "sqrt") {
      expect('(');
      ExactReal v = expr();
      expect(')');
      return sqrt(v);
    }
    if (name == "exp") {
      expect('(');
      ExactReal v = expr();
      expect(')');
      return exp(v);
    }
    if (name == "pow") {
      expect('(');
      ExactReal v = expr();
      expect(',');
      Rat r = rational();
      expect(')');
      return pow_rational(v, r);
    }
    if (name == "series") {
      expect('(');
      Int b = integer();
      expect(',');
      SeriesSpec spec;
      if (!mpz_fits_sint_p(b.get_mpz_t())) raise(Errc::ParseError, "series base out of range");
      spec.base = static_cast<int>(mpz_get_si(b.get_mpz_t()));
      if (peek() == '[') {
        spec.schedule.kind = ScheduleSpec::Kind::Custom;
        spec.schedule.prefix = int_list();
      } else {
        std::string sched = ident();
        if (sched == "factorial")
          spec.schedule.kind = ScheduleSpec::Kind::Factorial;
        else if (sched == "doubleexp")
          spec.schedule.kind = ScheduleSpec::Kind::DoubleExponential;
        else
          raise(Errc::ParseError, "unknown schedule '" + sched + "'");
      }
      if (consume(',')) {
        if (peek() == '[') {
          spec.digits.kind = DigitSpec::Kind::Pattern;
          for (unsigned long v : int_list()) spec.digits.pattern.push_back(static_cast<int>(v));
        } else {
          std::string dig = ident();
          if (dig != "ones") raise(Errc::ParseError, "unknown digit rule '" + dig + "'");
        }
      }
      expect(')');
      return make_series(spec);
    }
    raise(Errc::ParseError, "unknown value function '" + name + "'");
  }

  ExactReal unary() {
    if (consume('-')) return -unary();
    return atom();
  }

  ExactReal prod() {
    ExactReal v = unary();
    for (;;) {
      if (consume('*'))
        v = v * unary();
      else if (consume('/'))
        v = v / unary();
      else
        return v;
    }
  }

  ExactReal expr() {
    ExactReal v = prod();
    for (;;) {
      if (consume('+'))
        v = v + prod();
      else if (consume('-'))
        v = v - prod();
      else
        return v;
    }
  }
};

std::string schedule_string(const ScheduleSpec& s) {
  switch (s.kind) {
    case ScheduleSpec::Kind::Factorial: return "factorial";
    case ScheduleSpec::Kind::DoubleExponential: return "doubleexp";
    case ScheduleSpec::Kind::Custom: {
      std::string out = "[";
      for (size_t i = 0; i < s.prefix.size(); ++i)
        out += (i ? "," : "") + std::to_string(s.prefix[i]);
      return out + "]";
    }
  }
  return "?";
}

std::string digits_string(const DigitSpec& d) {
  if (d.kind == DigitSpec::Kind::Ones) return "ones";
  std::string out = "[";
  for (size_t i = 0; i < d.pattern.size(); ++i) out += (i ? "," : "") + std::to_string(d.pattern[i]);
  return out + "]";
}

}  // namespace

ExactReal parse_value_expr(const std::string& s) {
  ValueParser p(s);
  ExactReal v = p.expr();
  p.skip_ws();
  if (p.pos != s.size())
    raise(Errc::ParseError, "trailing input in value expression: '" + s.substr(p.pos) + "'");
  return v;
}

std::optional<std::string> value_expr_string(const RecipePtr& r) {
  if (!r) return std::nullopt;
  switch (r->kind) {
    case Recipe::Kind::Rational:
      return to_string(r->value);
    case Recipe::Kind::Series:
      return "series(" + std::to_string(r->series.base) + "," + schedule_string(r->series.schedule) +
             "," + digits_string(r->series.digits) + ")";
    case Recipe::Kind::DerivedArith: {
      if (r->children.size() != 2) return std::nullopt;
      auto a = value_expr_string(r->children[0]), b = value_expr_string(r->children[1]);
      if (!a || !b) return std::nullopt;
      const char* sym = r->op == "add" ? "+" : r->op == "sub" ? "-" : r->op == "mul" ? "*" : "/";
      return "(" + *a + sym + *b + ")";
    }
    case Recipe::Kind::Elementary: {
      if (r->children.size() != 1) return std::nullopt;
      auto a = value_expr_string(r->children[0]);
      if (!a) return std::nullopt;
      if (r->op == "exp") return "exp(" + *a + ")";
      if (r->op == "sqrt") return "sqrt(" + *a + ")";
      return "pow(" + *a + "," + to_string(r->value) + ")";
    }
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// map mini-language
// ---------------------------------------------------------------------------

namespace {

// split on '.' at paren depth 0
std::vector<std::string> split_atoms(const std::string& spec) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : spec) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '.' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

CatalogMap parse_atom(const std::string& atom_in) {
  std::string atom = strip(atom_in);
  if (atom.empty()) raise(Errc::ParseError, "empty map atom");
  if (atom == "id") return CatalogMap::identity();
  if (atom.rfind("inv(", 0) == 0 && atom.back() == ')')
    return parse_map_spec(atom.substr(4, atom.size() - 5)).inverse();
  if (atom.rfind("implicit(", 0) == 0 && atom.back() == ')') {
    std::string body = atom.substr(9, atom.size() - 10);
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : body) {
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') --depth;
      if (c == ';' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    if (parts.size() != 5) raise(Errc::ParseError, "implicit(P; xlo; xhi; ylo; yhi) takes 5 fields");
    BivarPolyQ P = parse_bivar(strip(parts[0]));
    QInterval xd(parse_rat(strip(parts[1])), parse_rat(strip(parts[2])));
    QInterval yr(parse_rat(strip(parts[3])), parse_rat(strip(parts[4])));
    return CatalogMap::implicit_curve(P, xd, yr);
  }
  size_t colon = atom.find(':');
  if (colon == std::string::npos)
    raise(Errc::ParseError, "bad map atom '" + atom + "'");
  std::string name = atom.substr(0, colon);
  std::string param = atom.substr(colon + 1);
  if (name == "pow") return CatalogMap::pow_map(parse_rat(strip(param)));
  ExactReal t = parse_value_expr(param);
  if (name == "add") return CatalogMap::add_const(t);
  if (name == "sub") return CatalogMap::sub_from(t);
  if (name == "scale") return CatalogMap::scale(t);
  if (name == "recip") return CatalogMap::reciprocal_scale(t);
  if (name == "sqrtdiff") return CatalogMap::sqrt_diff(t);
  if (name == "expscale") return CatalogMap::exp_scale(t);
  raise(Errc::ParseError, "unknown map '" + name + "'");
}

}  // namespace

CatalogMap parse_map_spec(const std::string& spec) {
  auto atoms = split_atoms(spec);
  if (atoms.empty()) raise(Errc::ParseError, "empty map spec");
  CatalogMap m = parse_atom(atoms.back());
  for (size_t i = atoms.size() - 1; i-- > 0;) m = parse_atom(atoms[i]).composed_with(m);
  return m;
}

}  // namespace liouville
