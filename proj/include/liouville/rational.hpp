#ifndef LIOUVILLE_RATIONAL_HPP
#define LIOUVILLE_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "liouville/errors.hpp"

// Exact rational scalar layer. Rational values are canonical mpq_class
// (positive denominator, gcd(|num|, den) = 1); mpq_class maintains that
// invariant through arithmetic. The helpers here add the integer-log and
// power plumbing the interval code needs.

namespace liouville {

using Int = mpz_class;
using Rat = mpq_class;

// 2^e as an exact rational, e may be negative.
Rat pow2(long e);

// b^e for integer b >= 2, e >= 0.
Int ipow(const Int& b, unsigned long e);

// r^e with e possibly negative (raises DivisorNotSeparatedFromZero on 0^-e).
Rat qpow(const Rat& r, long e);

// floor(log2(q)) for q > 0: the unique e with 2^e <= q < 2^(e+1).
long floor_log2(const Rat& q);

// smallest e with q <= 2^e (q > 0).
long ceil_log2(const Rat& q);

Int floor_q(const Rat& q);
Int ceil_q(const Rat& q);
// Nearest integer; ties round toward +infinity.
Int round_q(const Rat& q);

// True iff q's denominator is a power of two.
bool is_dyadic(const Rat& q);

// Exact k-th root test: if n = r^k for integer r >= 0, returns r.
std::optional<Int> exact_kth_root(const Int& n, unsigned long k);

// Parse "p/q" or "p" (arbitrary precision, canonicalized). Raises ParseError.
Rat parse_rat(const std::string& s);
std::string to_string(const Rat& q);

// Decimal rendering of q to `digits` fractional digits (truncated toward zero).
std::string decimal_string(const Rat& q, unsigned digits);

}  // namespace liouville

#endif  // LIOUVILLE_RATIONAL_HPP
