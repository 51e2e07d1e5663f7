#ifndef LIOUVILLE_EXPINDEP_HPP
#define LIOUVILLE_EXPINDEP_HPP

#include <optional>
#include <utility>
#include <vector>

#include "liouville/poly.hpp"

namespace liouville {

// Nonzero integer vector a, primitive (gcd 1, first nonzero entry positive),
// with sum a_j f_j equal to the constant c as a polynomial identity.
struct IntegerRelation {
  std::vector<Int> a;
  Rat c;
};

struct IndepVerdict {
  bool independent = true;
  // linear case: offending pair (i, j), 1-based, with g_i - g_j constant
  std::optional<std::pair<size_t, size_t>> dependent_pair;
  // algebraic case: exact dependence witness
  std::optional<IntegerRelation> relation;
};

// e^{g_1},...,e^{g_n} linearly independent over C(z) iff the s-images are
// pairwise distinct.
IndepVerdict lin_indep_exp(const std::vector<PolyQ>& gs);

// e^{f_1},...,e^{f_m} algebraically independent over C(z) iff the s-images
// are linearly independent over Q (exact elimination; the dependent verdict
// carries a primitive integer kernel vector).
IndepVerdict alg_indep_exp(const std::vector<PolyQ>& fs);

// Exact check of sum a_j f_j == c.
bool relation_verifies(const std::vector<PolyQ>& fs, const IntegerRelation& rel);

// The symbolic identity  prod_{a_i>0} X_i^{a_i} = e^c prod_{a_i<0} X_i^{|a_i|}
// witnessing algebraic dependence of the e^{f_i}.
struct MonomialIdentity {
  std::vector<std::pair<size_t, Int>> pos;  // (index, exponent), 0-based indices
  std::vector<std::pair<size_t, Int>> neg;
  Rat c;
};

MonomialIdentity monomial_certificate(const std::vector<PolyQ>& fs, const IntegerRelation& rel);

// Integer-coordinate basis extraction: g_i = sum_j lambda_ij f_j + c_i with
// the f_j spanning the s-images (constant terms zero, possibly scaled by a
// reciprocal integer so every lambda_ij is an integer).
struct ExponentBasis {
  std::vector<PolyQ> basis;
  std::vector<std::vector<Int>> lambda;  // n x m
  std::vector<Rat> constants;            // c_i
};

ExponentBasis exponent_basis(const std::vector<PolyQ>& gs);

// Brute-force oracle: search for polynomials A_1..A_n of degree <= degree_bound,
// not all zero, with sum A_i e^{g_i} = 0 through order trunc_order. Exact over
// the rationals; inputs must have zero constant terms (reduce first). The
// verdict is bound-relative.
struct OracleVerdict {
  bool independent_at_bound = true;
  std::optional<std::vector<PolyQ>> relation;
};

OracleVerdict series_dependence_oracle(const std::vector<PolyQ>& gs, unsigned degree_bound,
                                       unsigned trunc_order);

// exponent_basis reduction (drop the constants) followed by the oracle.
OracleVerdict reduced_series_oracle(const std::vector<PolyQ>& gs, unsigned degree_bound,
                                    unsigned trunc_order);

// A(X,Y) = P(F(X,Y)) by exact substitution; vanishes wherever F evaluates to
// a root of P. Raises ZeroP / ConstantF.
BivarPolyQ burger_annihilator(const PolyQ& P, const BivarPolyQ& F);

}  // namespace liouville

#endif  // LIOUVILLE_EXPINDEP_HPP
