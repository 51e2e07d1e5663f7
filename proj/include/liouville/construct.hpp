#ifndef LIOUVILLE_CONSTRUCT_HPP
#define LIOUVILLE_CONSTRUCT_HPP

#include <map>
#include <vector>

#include "liouville/catalog.hpp"
#include "liouville/liouville.hpp"
#include "liouville/poly.hpp"

namespace liouville {

// One interval-nesting stage: the steering interval shrank from `before` to
// `after` so that map `map_index` sends `after` into the punctured ball
// (p/q - q^-level, p/q + q^-level) \ {p/q}.
struct Stage {
  size_t map_index = 0;  // 0 = identity, 1.. = caller's maps
  unsigned level = 0;
  Int p;
  Int q;
  QInterval before, after;
};

struct ConstructionLog {
  std::vector<Stage> stages;
};

struct SteerOptions {
  // Selects which half of each punctured ball is kept; distinct seeds give
  // distinct constructed points, identical seeds reproduce bit-identically.
  unsigned long seed = 0;
};

struct SteerResult {
  QInterval final_interval;
  ExactReal point;
  std::vector<ExactReal> images;                    // index 0 = point, then f_i(point)
  std::vector<LiouvilleCertificate> certificates;   // parallel to images
  ConstructionLog log;                              // one stage per (map, level)
};

// Finite-stage interval nesting: processes every pair (map i, level n) in
// diagonal dovetail order, at each stage placing the image of the steering
// interval inside a punctured rational ball and pulling back by certified
// bisection. The identity map is implicitly prepended; the returned point
// keeps shrinking (and collecting higher identity levels) under refinement.
SteerResult steer(const std::vector<CatalogMap>& maps, const QInterval& I0, unsigned N,
                  const SteerOptions& opts = {});

struct SplitResult {
  ExactReal xi, eta;
  LiouvilleCertificate cert_xi, cert_eta;
};

// Erdos binary-block splitting with cut points m_j = (j+2)!: xi carries t's
// bits on blocks [m_1,m_2), [m_3,m_4), ...; eta the complement (and the
// integer part); xi + eta = t exactly (disjoint bit support). Dyadic t falls
// back to xi = series(2, factorial), eta = t - xi.
SplitResult erdos_split_sum(const ExactReal& t, unsigned N);

// Product split via steering against x -> t/x on a sign-matched interval;
// eta = t / xi exactly.
SplitResult erdos_split_prod(const ExactReal& t, unsigned N, const SteerOptions& opts = {});

// Pair (xi, eta) on the curve P(xi, eta) = 0 with eta = the implicit
// function of P over I x J (both partials sign-definite on the box).
SplitResult implicit_pair(const BivarPolyQ& P, const QInterval& I, const QInterval& J, unsigned N,
                          const SteerOptions& opts = {});

struct OrbitResult {
  ExactReal point;
  std::map<int, ExactReal> orbit;                     // k -> phi^k(point)
  std::map<int, LiouvilleCertificate> certificates;   // k in [-depth, depth]
};

// Steers against phi^k for k = -depth..depth. phi needs a bounded domain for
// the inverse iterates; when absent one is auto-sized from I0 (DomainEscape
// if no bounded domain keeps every iterate inside).
OrbitResult orbit_construct(const CatalogMap& phi, unsigned depth, unsigned N, const QInterval& I0,
                            const SteerOptions& opts = {});

}  // namespace liouville

#endif  // LIOUVILLE_CONSTRUCT_HPP
