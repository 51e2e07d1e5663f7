#include "liouville/rational.hpp"

#include <cctype>

namespace liouville {

Rat pow2(long e) {
  Rat r;
  if (e >= 0) {
    mpz_mul_2exp(r.get_num().get_mpz_t(), Int(1).get_mpz_t(), static_cast<unsigned long>(e));
  } else {
    mpz_mul_2exp(r.get_den().get_mpz_t(), Int(1).get_mpz_t(), static_cast<unsigned long>(-e));
    r.get_num() = 1;
  }
  r.canonicalize();
  return r;
}

Int ipow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Rat qpow(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  if (r == 0 && e < 0) raise(Errc::DivisorNotSeparatedFromZero, "0 raised to negative power");
  unsigned long a = static_cast<unsigned long>(e >= 0 ? e : -e);
  Rat out(ipow(r.get_num(), a), ipow(r.get_den(), a));
  out.canonicalize();
  if (e < 0) out = 1 / out;
  return out;
}

long floor_log2(const Rat& q) {
  if (q <= 0) raise(Errc::DomainError, "floor_log2 of nonpositive rational");
  long nb = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
  long db = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
  // 2^(nb-1) <= num < 2^nb and likewise for den, so the answer is
  // nb - db or nb - db - 1.
  long e = nb - db;
  // q >= 2^e  <=>  num >= den << e (e >= 0)  /  num << -e >= den
  Int lhs = q.get_num(), rhs = q.get_den();
  if (e >= 0)
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(e));
  else
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<unsigned long>(-e));
  return lhs >= rhs ? e : e - 1;
}

long ceil_log2(const Rat& q) {
  long e = floor_log2(q);
  return pow2(e) == q ? e : e + 1;
}

Int floor_q(const Rat& q) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int ceil_q(const Rat& q) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Int round_q(const Rat& q) { return floor_q(q + Rat(1, 2)); }

bool is_dyadic(const Rat& q) {
  const Int& d = q.get_den();
  return mpz_scan1(d.get_mpz_t(), 0) == mpz_sizeinbase(d.get_mpz_t(), 2) - 1;
}

std::optional<Int> exact_kth_root(const Int& n, unsigned long k) {
  if (n < 0) return std::nullopt;
  Int r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  if (exact) return r;
  return std::nullopt;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) raise(Errc::ParseError, "empty rational literal");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '-' && c != '+')
      raise(Errc::ParseError, "bad rational literal: " + s);
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    raise(Errc::ParseError, "bad rational literal: " + s);
  if (q.get_den() == 0) raise(Errc::ParseError, "zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string decimal_string(const Rat& q, unsigned digits) {
  Rat a = abs(q);
  Int ip = floor_q(a);
  Rat frac = a - Rat(ip);
  Int scaled = floor_q(frac * Rat(ipow(Int(10), digits)));
  std::string f = scaled.get_str();
  if (f.size() < digits) f.insert(f.begin(), digits - f.size(), '0');
  std::string out = (q < 0 ? "-" : "") + ip.get_str();
  if (digits > 0) out += "." + f;
  return out;
}

}  // namespace liouville
