#ifndef LIOUVILLE_CATALOG_HPP
#define LIOUVILLE_CATALOG_HPP

#include <memory>
#include <optional>
#include <string>

#include "liouville/exact_real.hpp"
#include "liouville/poly.hpp"

namespace liouville {

namespace detail {
struct MapNode;
using MapPtr = std::shared_ptr<const detail::MapNode>;
}  // namespace detail

// A continuous, strictly monotone, certified-evaluable real map. Strict
// monotonicity (a strengthening of "nowhere locally constant" that makes
// interval pullback a bisection) is certified at construction: parameters
// that would flatten the map are rejected.
class CatalogMap {
 public:
  static CatalogMap identity();
  static CatalogMap add_const(const ExactReal& t);          // x + t
  static CatalogMap sub_from(const ExactReal& t);           // t - x
  static CatalogMap scale(const ExactReal& t);              // t x, t != 0
  static CatalogMap reciprocal_scale(const ExactReal& t);   // t / x, t != 0
  static CatalogMap sqrt_diff(const ExactReal& t);          // sqrt(t - x^2), t > 0
  static CatalogMap exp_scale(const ExactReal& t);          // e^{t x}, t != 0
  static CatalogMap pow_map(const Rat& r);                  // x^r on x > 0, r != 0
  // y(x) solving P(x, y) = 0 inside y_range (P_y sign-definite there)
  static CatalogMap implicit_curve(const BivarPolyQ& P, const QInterval& x_domain,
                                   const QInterval& y_range);

  CatalogMap composed_with(const CatalogMap& inner) const;  // this after inner
  CatalogMap inverse() const;                               // needs a bounded domain
  CatalogMap restricted(const QInterval& domain) const;

  int direction() const;  // +1 increasing, -1 decreasing
  const std::optional<QInterval>& domain() const;

  // Validate I as a steering interval for this map (domain membership, range
  // brackets, positivity constraints). Raises DomainEscape / NoRootInJ / ...
  void check_domain(const QInterval& I) const;

  ExactReal apply(const ExactReal& x) const;
  ExactReal apply(const Rat& x) const { return apply(ExactReal(x)); }

  // Mini-language form ("sub:sqrt(2)", "expscale:1.expscale:1", ...); nullopt
  // when a parameter has no serializable construction.
  std::optional<std::string> spec_string() const;

  explicit CatalogMap(detail::MapPtr node) : node_(std::move(node)) {}
  const detail::MapPtr& node() const { return node_; }

 private:
  detail::MapPtr node_;
};

// Map mini-language: atoms joined by '.' (composition, right operand applied
// first): id | add:V | sub:V | scale:V | recip:V | sqrtdiff:V | expscale:V |
// pow:P/Q | inv(MAP) | implicit(P; YLO; YHI).
CatalogMap parse_map_spec(const std::string& spec);

// Value expressions: rational literals, sqrt(V), exp(V), pow(V, P/Q),
// series(BASE, factorial|doubleexp|[e1,e2,...][, ones|[d0,d1,...]]),
// parenthesized arithmetic (V+V), (V-V), (V*V), (V/V).
ExactReal parse_value_expr(const std::string& s);
std::optional<std::string> value_expr_string(const RecipePtr& r);

}  // namespace liouville

#endif  // LIOUVILLE_CATALOG_HPP
