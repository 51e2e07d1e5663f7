#ifndef LIOUVILLE_LIOUVILLE_HPP
#define LIOUVILLE_LIOUVILLE_HPP

#include <string>
#include <vector>

#include "liouville/exact_real.hpp"

namespace liouville {

// Evidence that a value x admits a rational approximation of level n:
// 0 < |x - p/q| <= q^-n with q >= 2. Checked by verify_certificate, not by
// construction.
struct Witness {
  unsigned n = 0;
  Int p;
  Int q;
};

// Finite certificate: one witness per level, contiguous 1..N.
struct LiouvilleCertificate {
  std::string label;
  RecipePtr recipe;  // subject reproducibility data (may be null)
  std::vector<Witness> witnesses;

  unsigned level() const { return static_cast<unsigned>(witnesses.size()); }
};

// Sum_k a_k b^{-e_k} with the factorial schedule and all-ones digits by
// default (base 10 gives the classical constant 0.110001...).
ExactReal series_constant(int base, const ScheduleSpec& schedule = {}, const DigitSpec& digits = {});

// Certified enclosure of u = -log||qx|| / log q. No real logarithm is
// evaluated: u is bracketed by exact comparisons ||qx|| versus q^{-u} over
// dyadic u, bisected to width 2^-u_grid_exp. Raises ZeroDistance when
// ||qx|| = 0 is certified, RefinementBudgetExceeded when ||qx|| cannot be
// separated from zero within x_budget.
QInterval u_level(const ExactReal& x, const Int& q, unsigned x_budget = 4096, long u_grid_exp = 16);

struct WitnessSearchBudget {
  unsigned cf_depth = 64;
  unsigned precision = 1024;
};

// One witness per level n = 1..N. Values built by a witness-producing
// construction (series constants, steered points, split parts) read their
// witnesses from that structure; anything else searches continued-fraction
// convergents. Raises WitnessSearchExhausted when no witness is found within
// the budget (not a disproof).
LiouvilleCertificate certify_level(const ExactReal& x, unsigned N, WitnessSearchBudget budget = {});

// Independent re-check: every witness must satisfy 0 < |x - p/q| <= q^-n,
// decided by certified interval comparison on x alone. Vacuously true for an
// empty witness list; raises InvalidCertificate on malformed structure and
// RefinementBudgetExceeded on undecidable boundary cases.
bool verify_certificate(const ExactReal& x, const LiouvilleCertificate& cert);

// Membership in the open punctured ball: 0 < |x - p/q| < q^-n.
bool un_membership(const ExactReal& x, unsigned n, const Witness& w, unsigned budget = 4096);

}  // namespace liouville

#endif  // LIOUVILLE_LIOUVILLE_HPP
