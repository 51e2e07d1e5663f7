#include "liouville/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "liouville/detail/real_node.hpp"

namespace liouville {

// ---------------------------------------------------------------------------
// PolyQ
// ---------------------------------------------------------------------------

PolyQ::PolyQ(const Rat& c) {
  if (c != 0) coeffs_.push_back(c);
}

PolyQ PolyQ::from_coeffs(std::vector<Rat> coeffs) {
  PolyQ p;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

PolyQ PolyQ::monomial(const Rat& c, size_t deg) {
  PolyQ p;
  if (c != 0) {
    p.coeffs_.assign(deg + 1, Rat(0));
    p.coeffs_[deg] = c;
  }
  return p;
}

void PolyQ::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat PolyQ::eval(const Rat& x) const {
  Rat acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return from_coeffs(std::move(c));
}

PolyQ PolyQ::operator-(const PolyQ& o) const { return *this + (-o); }

PolyQ PolyQ::operator-() const {
  std::vector<Rat> c = coeffs_;
  for (auto& v : c) v = -v;
  return from_coeffs(std::move(c));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
  if (is_zero() || o.is_zero()) return PolyQ();
  std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return from_coeffs(std::move(c));
}

PolyQ PolyQ::scaled(const Rat& s) const {
  std::vector<Rat> c = coeffs_;
  for (auto& v : c) v *= s;
  return from_coeffs(std::move(c));
}

namespace {

void append_term(std::ostringstream& out, const Rat& c, const std::string& mono, bool first) {
  Rat a = abs(c);
  if (first) {
    if (c < 0) out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  if (mono.empty()) {
    out << to_string(a);
  } else {
    if (a != 1) out << to_string(a) << "*";
    out << mono;
  }
}

}  // namespace

std::string PolyQ::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    std::string mono;
    if (i == 1)
      mono = std::string(1, var);
    else if (i > 1)
      mono = std::string(1, var) + "^" + std::to_string(i);
    append_term(out, coeffs_[i], mono, first);
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// polynomial parsing
// ---------------------------------------------------------------------------

namespace {

struct PolyParser {
  const std::string& src;
  size_t pos = 0;
  std::string vars;  // allowed variable characters

  explicit PolyParser(const std::string& s, std::string v) : src(s), vars(std::move(v)) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= src.size();
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  unsigned long parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (start == pos) raise(Errc::ParseError, "expected integer at '" + src.substr(start) + "'");
    return std::stoul(src.substr(start, pos - start));
  }

  Rat parse_coeff() {
    Int num(parse_uint());
    skip_ws();
    if (pos < src.size() && src[pos] == '/') {
      ++pos;
      Int den(parse_uint());
      if (den == 0) raise(Errc::ParseError, "zero denominator in coefficient");
      Rat q(num, den);
      q.canonicalize();
      return q;
    }
    return Rat(num);
  }

  // factor := RATIONAL | VAR ['^' UINT]; returns (coefficient, per-var degrees)
  void parse_factor(Rat& coeff, std::map<char, unsigned long>& degs) {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff *= parse_coeff();
      return;
    }
    if (vars.find(c) != std::string::npos) {
      ++pos;
      unsigned long e = 1;
      if (peek() == '^') {
        ++pos;
        e = parse_uint();
      }
      degs[c] += e;
      return;
    }
    raise(Errc::ParseError, std::string("unexpected character '") + c + "' in polynomial");
  }

  // term := factor ('*' factor)*
  void parse_term(Rat& coeff, std::map<char, unsigned long>& degs) {
    parse_factor(coeff, degs);
    while (peek() == '*') {
      ++pos;
      parse_factor(coeff, degs);
    }
  }

  // poly := [sign] term ([sign] term)*
  template <typename Emit>
  void parse(Emit emit) {
    bool first = true;
    while (!eof()) {
      int sign = 1;
      char c = peek();
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        raise(Errc::ParseError, "expected '+' or '-' between terms");
      }
      Rat coeff(sign);
      std::map<char, unsigned long> degs;
      parse_term(coeff, degs);
      emit(coeff, degs);
      first = false;
    }
    if (first) raise(Errc::ParseError, "empty polynomial");
  }
};

}  // namespace

PolyQ parse_poly(const std::string& s, char var) {
  PolyParser p(s, std::string(1, var));
  PolyQ out;
  p.parse([&](const Rat& coeff, const std::map<char, unsigned long>& degs) {
    unsigned long d = degs.count(var) ? degs.at(var) : 0;
    out = out + PolyQ::monomial(coeff, d);
  });
  return out;
}

BivarPolyQ parse_bivar(const std::string& s) {
  PolyParser p(s, "xy");
  BivarPolyQ out;
  p.parse([&](const Rat& coeff, const std::map<char, unsigned long>& degs) {
    unsigned long dx = degs.count('x') ? degs.at('x') : 0;
    unsigned long dy = degs.count('y') ? degs.at('y') : 0;
    out.add_term(static_cast<unsigned>(dx), static_cast<unsigned>(dy), coeff);
  });
  return out;
}

// ---------------------------------------------------------------------------
// SImage
// ---------------------------------------------------------------------------

bool SImage::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

bool SImage::operator==(const SImage& o) const {
  size_t n = std::max(coeffs.size(), o.coeffs.size());
  for (size_t i = 0; i < n; ++i) {
    Rat a = i < coeffs.size() ? coeffs[i] : Rat(0);
    Rat b = i < o.coeffs.size() ? o.coeffs[i] : Rat(0);
    if (a != b) return false;
  }
  return true;
}

SImage s_image(const PolyQ& g) {
  SImage s;
  for (long d = 1; d <= g.degree(); ++d) s.coeffs.push_back(g.coeff(static_cast<size_t>(d)));
  return s;
}

// ---------------------------------------------------------------------------
// BivarPolyQ
// ---------------------------------------------------------------------------

BivarPolyQ::BivarPolyQ(const Rat& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

void BivarPolyQ::add_term(unsigned i, unsigned j, const Rat& c) {
  auto key = Key{i, j};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (c != 0) terms_[key] = c;
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool BivarPolyQ::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
}

unsigned BivarPolyQ::degree_x() const {
  unsigned d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

unsigned BivarPolyQ::degree_y() const {
  unsigned d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

Rat BivarPolyQ::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [k, c] : terms_) acc += c * qpow(x, k.first) * qpow(y, k.second);
  return acc;
}

namespace {

QInterval ipow_interval(const QInterval& J, unsigned n) {
  if (n == 0) return QInterval::point(Rat(1));
  Rat a = qpow(J.lo, n), b = qpow(J.hi, n);
  if (n % 2 == 1) return QInterval(a, b);
  if (J.lo >= 0) return QInterval(a, b);
  if (J.hi <= 0) return QInterval(b, a);
  return QInterval(Rat(0), std::max(a, b));
}

}  // namespace

QInterval BivarPolyQ::eval_interval(const QInterval& X, const QInterval& Y) const {
  std::vector<QInterval> xp(degree_x() + 1, QInterval::point(Rat(1)));
  std::vector<QInterval> yp(degree_y() + 1, QInterval::point(Rat(1)));
  for (unsigned i = 1; i < xp.size(); ++i) xp[i] = ipow_interval(X, i);
  for (unsigned j = 1; j < yp.size(); ++j) yp[j] = ipow_interval(Y, j);
  QInterval acc = QInterval::point(Rat(0));
  for (const auto& [k, c] : terms_) acc = acc + c * (xp[k.first] * yp[k.second]);
  return acc;
}

BivarPolyQ BivarPolyQ::dx() const {
  BivarPolyQ out;
  for (const auto& [k, c] : terms_)
    if (k.first > 0) out.add_term(k.first - 1, k.second, c * Rat(static_cast<long>(k.first)));
  return out;
}

BivarPolyQ BivarPolyQ::dy() const {
  BivarPolyQ out;
  for (const auto& [k, c] : terms_)
    if (k.second > 0) out.add_term(k.first, k.second - 1, c * Rat(static_cast<long>(k.second)));
  return out;
}

BivarPolyQ BivarPolyQ::operator+(const BivarPolyQ& o) const {
  BivarPolyQ out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
  return out;
}

BivarPolyQ BivarPolyQ::operator*(const BivarPolyQ& o) const {
  BivarPolyQ out;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BivarPolyQ BivarPolyQ::scaled(const Rat& s) const {
  BivarPolyQ out;
  if (s == 0) return out;
  for (const auto& [k, c] : terms_) out.terms_[k] = c * s;
  return out;
}

std::string BivarPolyQ::str() const {
  if (terms_.empty()) return "0";
  // highest x-degree first, then highest y-degree
  std::vector<std::pair<Key, Rat>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second > b.first.second;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : ordered) {
    std::string mono;
    if (k.first == 1) mono += "x";
    if (k.first > 1) mono += "x^" + std::to_string(k.first);
    if (k.second >= 1 && !mono.empty()) mono += "*";
    if (k.second == 1) mono += "y";
    if (k.second > 1) mono += "y^" + std::to_string(k.second);
    append_term(out, c, mono, first);
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// exact-real evaluation
// ---------------------------------------------------------------------------

namespace {

class PolyEval2Node final : public detail::RealNode {
 public:
  PolyEval2Node(BivarPolyQ P, detail::NodePtr x, detail::NodePtr y)
      : P_(std::move(P)), x_(std::move(x)), y_(std::move(y)) {}

 protected:
  QInterval enclose(unsigned k) const override {
    unsigned g = target(k);
    // adaptive: polynomial interval evaluation contracts linearly in the
    // operand width once the box is small, so double the operand precision
    // until the result is tight enough
    Rat goal = pow2(-static_cast<long>(g) - 1);
    for (unsigned kk = g + 4;; kk *= 2) {
      QInterval r = P_.eval_interval(x_->refine(kk), y_->refine(kk));
      if (r.width() <= goal) return r;
      if (kk > 64 * (g + 64))
        raise(Errc::BudgetExceeded, "polynomial evaluation failed to contract");
    }
  }

 private:
  BivarPolyQ P_;
  detail::NodePtr x_, y_;
};

}  // namespace

ExactReal eval_exact(const BivarPolyQ& P, const ExactReal& x, const ExactReal& y) {
  auto vx = x.rational_value(), vy = y.rational_value();
  if (vx && vy) return ExactReal(P.eval(*vx, *vy));
  return ExactReal(std::make_shared<PolyEval2Node>(P, x.node(), y.node()));
}

}  // namespace liouville
