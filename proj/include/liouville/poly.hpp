#ifndef LIOUVILLE_POLY_HPP
#define LIOUVILLE_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liouville/exact_real.hpp"
#include "liouville/interval.hpp"

namespace liouville {

// Dense univariate polynomial over Q; highest-degree coefficient nonzero
// unless the polynomial is zero.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(const Rat& c);
  static PolyQ from_coeffs(std::vector<Rat> coeffs);
  static PolyQ monomial(const Rat& c, size_t deg);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rat coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat constant_term() const { return coeff(0); }

  Rat eval(const Rat& x) const;

  PolyQ operator+(const PolyQ& o) const;
  PolyQ operator-(const PolyQ& o) const;
  PolyQ operator*(const PolyQ& o) const;
  PolyQ operator-() const;
  PolyQ scaled(const Rat& s) const;
  bool operator==(const PolyQ& o) const { return coeffs_ == o.coeffs_; }

  std::string str(char var = 'z') const;

 private:
  std::vector<Rat> coeffs_;
  void normalize();
};

// "z^3 - 2*z + 1/2": terms joined by +/-, each a '*'-product of rational
// literals and var[^exp] factors.
PolyQ parse_poly(const std::string& s, char var = 'z');

// Image of a polynomial under the quotient by constants: the coefficient
// vector of z^1..z^D. Two polynomials have equal s-image iff they differ by
// a constant.
struct SImage {
  std::vector<Rat> coeffs;  // coeffs[d-1] = coefficient of z^d
  bool is_zero() const;
  bool operator==(const SImage& o) const;
};

SImage s_image(const PolyQ& g);

// Sparse bivariate polynomial over Q; no stored zero coefficients.
class BivarPolyQ {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (deg x, deg y)

  BivarPolyQ() = default;
  explicit BivarPolyQ(const Rat& c);

  void add_term(unsigned i, unsigned j, const Rat& c);
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned degree_x() const;
  unsigned degree_y() const;

  Rat eval(const Rat& x, const Rat& y) const;
  QInterval eval_interval(const QInterval& X, const QInterval& Y) const;

  BivarPolyQ dx() const;
  BivarPolyQ dy() const;

  BivarPolyQ operator+(const BivarPolyQ& o) const;
  BivarPolyQ operator*(const BivarPolyQ& o) const;
  BivarPolyQ scaled(const Rat& s) const;
  bool operator==(const BivarPolyQ& o) const { return terms_ == o.terms_; }

  std::string str() const;  // in x, y

 private:
  std::map<Key, Rat> terms_;
};

BivarPolyQ parse_bivar(const std::string& s);

// P(x, y) as a refinable value for exact-real arguments.
ExactReal eval_exact(const BivarPolyQ& P, const ExactReal& x, const ExactReal& y);

}  // namespace liouville

#endif  // LIOUVILLE_POLY_HPP
