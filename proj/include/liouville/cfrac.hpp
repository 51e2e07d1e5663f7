#ifndef LIOUVILLE_CFRAC_HPP
#define LIOUVILLE_CFRAC_HPP

#include <vector>

#include "liouville/exact_real.hpp"

namespace liouville {

// Continued fraction [a0; a1, a2, ...] with a_i >= 1 for i >= 1. `exact`
// marks a terminated rational expansion (canonical form: length >= 2 implies
// last quotient >= 2); otherwise the quotients are a certified prefix.
struct CFrac {
  std::vector<Int> quotients;
  bool exact = false;
};

inline constexpr unsigned kCfracBudget = 512;

// First <= depth partial quotients. The rational overload runs the Euclidean
// algorithm (canonical, exact unless cut by depth). The ExactReal overload
// emits a quotient only once the certified enclosure pins it down, doubling
// precision up to `budget`; stalling before `depth` quotients raises
// RefinementBudgetExceeded (e.g. the value is secretly rational).
CFrac cf_expand(const Rat& x, unsigned depth);
CFrac cf_expand(const ExactReal& x, unsigned depth, unsigned budget = kCfracBudget);

struct Convergent {
  Int p;
  Int q;
};

// p_k = a_k p_{k-1} + p_{k-2}, q_k = a_k q_{k-1} + q_{k-2}; automatically in
// lowest terms.
std::vector<Convergent> convergents(const CFrac& cf);

// Exact value of a finite expansion.
Rat cf_value(const CFrac& cf);

// true iff ||q' x|| > |q x - p| for every 1 <= q' < q. Exact for rational x;
// otherwise decided with certified intervals (RefinementBudgetExceeded on
// ties unresolvable at the budget).
bool best_approx_check(const ExactReal& x, const Int& p, const Int& q, unsigned budget = 4096);

// Indices k such that both parts of convergent p_k/q_k are perfect
// `power`-th powers. power == 1 trivially keeps every index; for power >= 2
// only convergents with q_k >= 2 participate (the q >= 2 witness convention).
std::vector<size_t> maillet_root_witnesses(const ExactReal& x, unsigned long power, unsigned depth,
                                           unsigned budget = kCfracBudget);

}  // namespace liouville

#endif  // LIOUVILLE_CFRAC_HPP
