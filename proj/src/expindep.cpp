#include "liouville/expindep.hpp"

#include <algorithm>
#include <cstdint>

namespace liouville {

// ---------------------------------------------------------------------------
// exact rational RREF
// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<Rat>>;

// In-place reduced row echelon form; returns the pivot column of each
// surviving row, in order.
std::vector<size_t> rref(Matrix& m) {
  std::vector<size_t> pivots;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);  // drop zero rows
  return pivots;
}

// Deterministic kernel vector of the column-space system m * a = 0: take the
// first free column of the RREF, set it to 1, read pivot coordinates off.
std::optional<std::vector<Rat>> first_kernel_vector(Matrix m, size_t unknowns) {
  auto pivots = rref(m);
  if (pivots.size() == unknowns) return std::nullopt;
  size_t free_col = 0;
  while (free_col < unknowns &&
         std::find(pivots.begin(), pivots.end(), free_col) != pivots.end())
    ++free_col;
  std::vector<Rat> a(unknowns, Rat(0));
  a[free_col] = 1;
  for (size_t r = 0; r < pivots.size(); ++r)
    if (pivots[r] < unknowns && free_col < m[r].size()) a[pivots[r]] = -m[r][free_col];
  return a;
}

// Scale a rational vector to a primitive integer vector with positive leading
// nonzero entry.
std::vector<Int> to_primitive(const std::vector<Rat>& a) {
  Int l(1);
  for (const auto& q : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> out;
  out.reserve(a.size());
  Int g(0);
  for (const auto& q : a) {
    Rat s = q * Rat(l);
    out.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  for (const auto& v : out) {
    if (v == 0) continue;
    if (v < 0)
      for (auto& w : out) w = -w;
    break;
  }
  return out;
}

size_t max_degree(const std::vector<PolyQ>& ps) {
  long d = 0;
  for (const auto& p : ps) d = std::max(d, p.degree());
  return static_cast<size_t>(std::max(0L, d));
}

PolyQ combine(const std::vector<PolyQ>& fs, const std::vector<Int>& a) {
  PolyQ acc;
  for (size_t j = 0; j < fs.size(); ++j) acc = acc + fs[j].scaled(Rat(a[j]));
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// decision procedures
// ---------------------------------------------------------------------------

IndepVerdict lin_indep_exp(const std::vector<PolyQ>& gs) {
  IndepVerdict v;
  std::vector<SImage> imgs;
  imgs.reserve(gs.size());
  for (const auto& g : gs) imgs.push_back(s_image(g));
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i + 1; j < gs.size(); ++j)
      if (imgs[i] == imgs[j]) {
        v.independent = false;
        v.dependent_pair = {i + 1, j + 1};
        return v;
      }
  return v;
}

IndepVerdict alg_indep_exp(const std::vector<PolyQ>& fs) {
  IndepVerdict v;
  if (fs.empty()) return v;
  size_t m = fs.size();
  size_t D = max_degree(fs);
  // columns = unknowns a_1..a_m, rows = z^1..z^D coefficients
  Matrix sys(D, std::vector<Rat>(m, Rat(0)));
  for (size_t j = 0; j < m; ++j)
    for (long d = 1; d <= fs[j].degree(); ++d) sys[d - 1][j] = fs[j].coeff(static_cast<size_t>(d));
  auto kernel = first_kernel_vector(std::move(sys), m);
  if (!kernel) return v;
  IntegerRelation rel;
  rel.a = to_primitive(*kernel);
  PolyQ sum = combine(fs, rel.a);
  if (!sum.is_constant()) throw std::logic_error("kernel vector is not a relation");
  rel.c = sum.constant_term();
  v.independent = false;
  v.relation = std::move(rel);
  return v;
}

bool relation_verifies(const std::vector<PolyQ>& fs, const IntegerRelation& rel) {
  if (rel.a.size() != fs.size()) return false;
  bool nonzero = false;
  for (const auto& ai : rel.a) nonzero = nonzero || ai != 0;
  if (!nonzero) return false;
  return combine(fs, rel.a) == PolyQ(rel.c);
}

MonomialIdentity monomial_certificate(const std::vector<PolyQ>& fs, const IntegerRelation& rel) {
  if (!relation_verifies(fs, rel))
    raise(Errc::InvalidRelation, "sum a_j f_j is not the claimed constant");
  MonomialIdentity id;
  id.c = rel.c;
  for (size_t j = 0; j < rel.a.size(); ++j) {
    if (rel.a[j] > 0) id.pos.emplace_back(j, rel.a[j]);
    if (rel.a[j] < 0) id.neg.emplace_back(j, -rel.a[j]);
  }
  return id;
}

ExponentBasis exponent_basis(const std::vector<PolyQ>& gs) {
  ExponentBasis eb;
  size_t n = gs.size();
  size_t D = max_degree(gs);
  Matrix rows(n, std::vector<Rat>(D, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (long d = 1; d <= gs[i].degree(); ++d) rows[i][d - 1] = gs[i].coeff(static_cast<size_t>(d));
  Matrix rr = rows;
  auto pivots = rref(rr);
  size_t m = pivots.size();

  // rational coordinates: lambda'_ij = (s-image of g_i) at pivot column j
  Matrix lam(n, std::vector<Rat>(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) lam[i][j] = rows[i][pivots[j]];

  // divide basis vector j by the lcm of coordinate denominators
  eb.lambda.assign(n, std::vector<Int>(m, Int(0)));
  for (size_t j = 0; j < m; ++j) {
    Int dj(1);
    for (size_t i = 0; i < n; ++i)
      mpz_lcm(dj.get_mpz_t(), dj.get_mpz_t(), lam[i][j].get_den().get_mpz_t());
    std::vector<Rat> coeffs(D + 1, Rat(0));
    for (size_t d = 0; d < D; ++d) coeffs[d + 1] = rr[j][d] / Rat(dj);
    eb.basis.push_back(PolyQ::from_coeffs(std::move(coeffs)));
    for (size_t i = 0; i < n; ++i) {
      Rat v = lam[i][j] * Rat(dj);
      if (v.get_den() != 1) throw std::logic_error("lambda scaling failed");
      eb.lambda[i][j] = v.get_num();
    }
  }

  for (size_t i = 0; i < n; ++i) {
    PolyQ rem = gs[i];
    for (size_t j = 0; j < m; ++j) rem = rem - eb.basis[j].scaled(Rat(eb.lambda[i][j]));
    if (!rem.is_constant()) throw std::logic_error("exponent basis reconstruction failed");
    eb.constants.push_back(rem.constant_term());
  }
  return eb;
}

// ---------------------------------------------------------------------------
// series oracle
// ---------------------------------------------------------------------------

namespace {

// e^g as a truncated power series (g(0) = 0): (t+1) h_{t+1} = sum_j (j+1) g_{j+1} h_{t-j}
std::vector<Rat> exp_series(const PolyQ& g, unsigned T) {
  std::vector<Rat> h(T + 1, Rat(0));
  h[0] = 1;
  for (unsigned t = 0; t < T; ++t) {
    Rat acc(0);
    for (long j = 0; j < g.degree() && static_cast<unsigned>(j) <= t; ++j)
      acc += Rat(j + 1) * g.coeff(static_cast<size_t>(j + 1)) * h[t - static_cast<unsigned>(j)];
    h[t + 1] = acc / Rat(t + 1);
  }
  return h;
}

// rank over F_p as a fast certified lower bound for the rational rank
constexpr std::uint64_t kOraclePrime = (1ULL << 61) - 1;

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kOraclePrime);
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, b);
    b = mod_mul(b, b);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> mod_of(const Rat& q) {
  std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), kOraclePrime);
  std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), kOraclePrime);
  if (den == 0) return std::nullopt;
  return mod_mul(num, mod_pow(den, kOraclePrime - 2));
}

// returns nullopt when some denominator vanishes mod p (fall back to exact)
std::optional<size_t> rank_mod_p(const Matrix& m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      auto v = mod_of(m[i][j]);
      if (!v) return std::nullopt;
      a[i][j] = *v;
    }
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t sel = rank;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[rank]);
    std::uint64_t inv = mod_pow(a[rank][c], kOraclePrime - 2);
    for (size_t j = c; j < cols; ++j) a[rank][j] = mod_mul(a[rank][j], inv);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = a[i][c];
      for (size_t j = c; j < cols; ++j)
        a[i][j] = (a[i][j] + kOraclePrime - mod_mul(f, a[rank][j])) % kOraclePrime;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

OracleVerdict series_dependence_oracle(const std::vector<PolyQ>& gs, unsigned degree_bound,
                                       unsigned trunc_order) {
  if (gs.empty()) raise(Errc::DomainError, "oracle needs at least one polynomial");
  for (const auto& g : gs)
    if (g.constant_term() != 0)
      raise(Errc::DomainError, "oracle inputs must have zero constant term (reduce first)");
  size_t n = gs.size();
  size_t U = n * (degree_bound + 1);
  if (trunc_order < U)
    raise(Errc::DomainError, "truncation order below unknown count");

  std::vector<std::vector<Rat>> series;
  series.reserve(n);
  for (const auto& g : gs) series.push_back(exp_series(g, trunc_order));

  // rows: coefficient of z^t in sum_i sum_d A_{i,d} z^d e^{g_i}
  Matrix sys(trunc_order + 1, std::vector<Rat>(U, Rat(0)));
  for (unsigned t = 0; t <= trunc_order; ++t)
    for (size_t i = 0; i < n; ++i)
      for (unsigned d = 0; d <= degree_bound && d <= t; ++d)
        sys[t][i * (degree_bound + 1) + d] = series[i][t - d];

  OracleVerdict v;
  if (auto r = rank_mod_p(sys); r && *r == U) return v;  // full rank certified

  auto kernel = first_kernel_vector(sys, U);
  if (!kernel) return v;
  std::vector<Int> scaled = to_primitive(*kernel);
  std::vector<PolyQ> rel;
  rel.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rat> c(degree_bound + 1, Rat(0));
    for (unsigned d = 0; d <= degree_bound; ++d) c[d] = Rat(scaled[i * (degree_bound + 1) + d]);
    rel.push_back(PolyQ::from_coeffs(std::move(c)));
  }
  v.independent_at_bound = false;
  v.relation = std::move(rel);
  return v;
}

OracleVerdict reduced_series_oracle(const std::vector<PolyQ>& gs, unsigned degree_bound,
                                    unsigned trunc_order) {
  ExponentBasis eb = exponent_basis(gs);
  std::vector<PolyQ> reduced;
  reduced.reserve(gs.size());
  for (size_t i = 0; i < gs.size(); ++i) reduced.push_back(gs[i] - PolyQ(eb.constants[i]));
  return series_dependence_oracle(reduced, degree_bound, trunc_order);
}

// ---------------------------------------------------------------------------
// Burger composition
// ---------------------------------------------------------------------------

BivarPolyQ burger_annihilator(const PolyQ& P, const BivarPolyQ& F) {
  if (P.is_zero()) raise(Errc::ZeroP, "minimal polynomial is zero");
  if (F.is_constant()) raise(Errc::ConstantF, "composition argument is constant");
  BivarPolyQ acc;
  for (long k = P.degree(); k >= 0; --k) {
    acc = acc * F;
    acc.add_term(0, 0, P.coeff(static_cast<size_t>(k)));
  }
  return acc;
}

}  // namespace liouville
