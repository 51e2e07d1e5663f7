#include "liouville/construct.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <random>

#include "liouville/detail/real_node.hpp"
#include "liouville/detail/series_node.hpp"

namespace liouville {
namespace {

using detail::NodePtr;
using detail::RealNode;

// ---------------------------------------------------------------------------
// steering engine
// ---------------------------------------------------------------------------

constexpr unsigned kImageBudget = 1u << 20;
constexpr unsigned kBisectSoft = 1u << 12;
constexpr unsigned kBisectHard = 1u << 22;

enum class Where { Below, Inside, Above };

// classify f(m) against the open window (w_lo, w_hi) with certified intervals
Where classify(const ExactReal& value, const Rat& w_lo, const Rat& w_hi, unsigned budget) {
  for (unsigned k = 8;; k = std::min(budget, k * 2)) {
    QInterval I = value.refine(k);
    if (I.hi < w_lo) return Where::Below;
    if (I.lo > w_hi) return Where::Above;
    if (I.lo > w_lo && I.hi < w_hi) return Where::Inside;
    if (k >= budget)
      raise(Errc::BudgetExceeded, "window classification undecided at precision " +
                                      std::to_string(budget));
  }
}

class SteerEngine {
 public:
  SteerEngine(std::vector<CatalogMap> maps, QInterval I0, unsigned N, unsigned long seed)
      : maps_(std::move(maps)), cur_(std::move(I0)), N_(N), rng_(seed) {
    if (!(cur_.lo < cur_.hi)) raise(Errc::DomainError, "steering needs an interval with lo < hi");
    for (const auto& m : maps_) m.check_domain(cur_);
  }

  // all (map, level) pairs in diagonal order by i + n, then i
  void run_planned() {
    std::vector<std::pair<size_t, unsigned>> pairs;
    for (size_t i = 0; i < maps_.size(); ++i)
      for (unsigned n = 1; n <= N_; ++n) pairs.emplace_back(i, n);
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
      return a.first + a.second != b.first + b.second ? a.first + a.second < b.first + b.second
                                                      : a.first < b.first;
    });
    for (const auto& [i, n] : pairs) run_stage(i, n);
    planned_ = log_.size();
    cont_level_ = N_;
    snaps_.push_back(cur_);
  }

  void continue_once() {
    run_stage(0, ++cont_level_);
    snaps_.push_back(cur_);
  }

  const QInterval& current() const { return cur_; }
  const std::vector<Stage>& stages() const { return log_; }
  size_t planned() const { return planned_; }
  const std::vector<QInterval>& snapshots() const { return snaps_; }

  std::optional<std::pair<Int, Int>> identity_witness(unsigned n) {
    while (cont_level_ < n && cont_level_ >= N_) continue_once();
    for (const Stage& s : log_)
      if (s.map_index == 0 && s.level == n) return std::make_pair(s.p, s.q);
    return std::nullopt;
  }

  std::optional<std::pair<Int, Int>> map_witness(size_t i, unsigned n) const {
    for (const Stage& s : log_)
      if (s.map_index == i && s.level == n) return std::make_pair(s.p, s.q);
    return std::nullopt;
  }

 private:
  void run_stage(size_t i, unsigned n) {
    const CatalogMap& f = maps_[i];
    ExactReal flo = f.apply(cur_.lo);
    ExactReal fhi = f.apply(cur_.hi);
    bool inc = f.direction() > 0;

    // certified inner image [A, B] of f over cur_ with positive width
    Rat A, B;
    for (unsigned prec = 16;; prec = std::min(kImageBudget, prec * 2)) {
      QInterval a = flo.refine(prec), b = fhi.refine(prec);
      A = inc ? a.hi : b.hi;
      B = inc ? b.lo : a.lo;
      if (A < B) break;
      if (prec >= kImageBudget)
        raise(Errc::ImageCollapse, "image width of map " + std::to_string(i) +
                                       " not certified positive");
    }
    Rat w = B - A;

    // q = smallest power of two with q^-n < w/4
    long m = 1;
    {
      long e = ceil_log2(4 / w);  // 2^e >= 4/w
      m = std::max(1L, e / static_cast<long>(n));
      while (pow2(-m * static_cast<long>(n)) >= w / 4) ++m;
      while (m > 1 && pow2(-(m - 1) * static_cast<long>(n)) < w / 4) --m;
    }
    Int q = 1;
    mpz_mul_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(m));
    Rat r = pow2(-m * static_cast<long>(n));

    // center p/q at the midpoint, nudged into the middle half of [A, B]
    Int p = round_q(((A + B) / 2) * Rat(q));
    Rat c = Rat(p) / Rat(q);
    if (c < A + w / 4) {
      p += 1;
      c = Rat(p) / Rat(q);
    } else if (c > B - w / 4) {
      p -= 1;
      c = Rat(p) / Rat(q);
    }

    // keep one closed half of the punctured ball, clear of p/q
    bool lower = (rng_() & 1) == 0;
    Rat alpha = lower ? c - r * Rat(7, 8) : c + r * Rat(1, 8);
    Rat beta = lower ? c - r * Rat(1, 8) : c + r * Rat(7, 8);
    Rat mid_t = (alpha + beta) / 2;

    // pull the window back to [u, v] strictly inside cur_
    Rat u, v;
    if (inc) {
      u = bisect_window(f, cur_.lo, cur_.hi, alpha, mid_t, true);
      v = bisect_window(f, u, cur_.hi, mid_t, beta, true);
    } else {
      u = bisect_window(f, cur_.lo, cur_.hi, mid_t, beta, false);
      v = bisect_window(f, u, cur_.hi, alpha, mid_t, false);
    }
    if (!(cur_.lo < u && u < v && v < cur_.hi))
      throw std::logic_error("steering stage failed to shrink strictly");

    Stage st;
    st.map_index = i;
    st.level = n;
    st.p = p;
    st.q = q;
    st.before = cur_;
    st.after = QInterval(u, v);
    log_.push_back(std::move(st));
    cur_ = QInterval(u, v);
  }

  // Find m in (s, t) with f(m) certified inside (w_lo, w_hi). For increasing
  // f the invariant is f(s) < w_lo < w_hi < f(t); decreasing mirrors it.
  Rat bisect_window(const CatalogMap& f, Rat s, Rat t, const Rat& w_lo, const Rat& w_hi,
                    bool inc) {
    for (int iter = 0; iter < 4096; ++iter) {
      Rat m = (s + t) / 2;
      Where wh;
      try {
        wh = classify(f.apply(m), w_lo, w_hi, kBisectSoft);
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExceeded) throw;
        // m may sit on a window boundary curve; retry off-center
        m = s + (t - s) * Rat(7, 16);
        wh = classify(f.apply(m), w_lo, w_hi, kBisectHard);
      }
      if (wh == Where::Inside) return m;
      bool go_right = (wh == Where::Below) == inc;
      if (go_right)
        s = m;
      else
        t = m;
    }
    raise(Errc::BudgetExceeded, "steering pullback bisection failed to land in the window");
  }

  std::vector<CatalogMap> maps_;
  QInterval cur_;
  unsigned N_;
  std::vector<Stage> log_;
  size_t planned_ = 0;
  unsigned cont_level_ = 0;
  std::vector<QInterval> snaps_;
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// steered point and image nodes
// ---------------------------------------------------------------------------

class SteeredNode final : public RealNode {
 public:
  SteeredNode(std::shared_ptr<SteerEngine> eng, RecipePtr rec)
      : RealNode(std::move(rec)), eng_(std::move(eng)) {}

  std::optional<std::pair<Int, Int>> witness_for_level(unsigned n) const override {
    std::scoped_lock lock(emu_);
    return eng_->identity_witness(n);
  }

  std::shared_ptr<SteerEngine> engine() const { return eng_; }

 protected:
  QInterval enclose(unsigned k) const override {
    std::scoped_lock lock(emu_);
    Rat goal = pow2(-static_cast<long>(target(k)) - 1);
    for (size_t i = 0;; ++i) {
      while (i >= eng_->snapshots().size()) eng_->continue_once();
      if (eng_->snapshots()[i].width() <= goal) return eng_->snapshots()[i];
    }
  }

 private:
  std::shared_ptr<SteerEngine> eng_;
  mutable std::mutex emu_;
};

// Delegates the value to `inner` and answers witness queries from a custom
// source (steer logs, split block structure).
class WitnessWrapNode final : public RealNode {
 public:
  using WitnessFn = std::function<std::optional<std::pair<Int, Int>>(unsigned)>;

  WitnessWrapNode(NodePtr inner, WitnessFn fn, RecipePtr rec)
      : RealNode(std::move(rec)), inner_(std::move(inner)), fn_(std::move(fn)) {}

  std::optional<std::pair<Int, Int>> witness_for_level(unsigned n) const override {
    return fn_(n);
  }
  std::optional<Rat> rational_value() const override { return inner_->rational_value(); }

 protected:
  QInterval enclose(unsigned k) const override { return inner_->refine(k + 1); }

 private:
  NodePtr inner_;
  WitnessFn fn_;
};

RecipePtr steered_recipe(const std::vector<CatalogMap>& user_maps, const QInterval& I0, unsigned N,
                         unsigned long seed) {
  auto rec = std::make_shared<Recipe>();
  rec->kind = Recipe::Kind::Steered;
  rec->interval = I0;
  rec->level = static_cast<int>(N);
  rec->seed = seed;
  for (const auto& m : user_maps) {
    auto s = m.spec_string();
    if (!s) return nullptr;
    rec->map_specs.push_back(*s);
  }
  return rec;
}

RecipePtr map_eval_recipe(const CatalogMap& map, const RecipePtr& child, size_t index) {
  if (!child) return nullptr;
  auto s = map.spec_string();
  if (!s) return nullptr;
  auto rec = std::make_shared<Recipe>();
  rec->kind = Recipe::Kind::MapEval;
  rec->map_specs.push_back(*s);
  rec->children.push_back(child);
  rec->part = static_cast<int>(index);
  return rec;
}

}  // namespace

SteerResult steer(const std::vector<CatalogMap>& maps, const QInterval& I0, unsigned N,
                  const SteerOptions& opts) {
  if (N == 0) raise(Errc::DomainError, "steer requires N >= 1");
  std::vector<CatalogMap> all;
  all.push_back(CatalogMap::identity());
  for (const auto& m : maps) all.push_back(m);

  auto eng = std::make_shared<SteerEngine>(all, I0, N, opts.seed);
  eng->run_planned();

  SteerResult res;
  res.final_interval = eng->current();
  res.log.stages.assign(eng->stages().begin(), eng->stages().begin() + eng->planned());

  RecipePtr prec = steered_recipe(maps, I0, N, opts.seed);
  auto pnode = std::make_shared<SteeredNode>(eng, prec);
  res.point = ExactReal(pnode);

  res.images.push_back(res.point);
  for (size_t i = 1; i < all.size(); ++i) {
    ExactReal value = all[i].apply(res.point);
    auto wfn = [eng, i](unsigned n) { return eng->map_witness(i, n); };
    auto node = std::make_shared<WitnessWrapNode>(value.node(), wfn,
                                                  map_eval_recipe(all[i], prec, i));
    res.images.push_back(ExactReal(node));
  }
  for (const auto& img : res.images) res.certificates.push_back(certify_level(img, N));
  return res;
}

// ---------------------------------------------------------------------------
// Erdos sum split
// ---------------------------------------------------------------------------

namespace {

// cut points m_j = (j+2)!, j >= 1
long cut_point(unsigned j) {
  long m = 1;
  for (unsigned i = 2; i <= j + 2; ++i) {
    m *= static_cast<long>(i);
    if (m > (1L << 40)) raise(Errc::BudgetExceeded, "split block index out of range");
  }
  return m;
}

// block index of fractional position b >= 1: largest j with m_j <= b (0 if b < m_1);
// odd j belongs to xi, even j (and the integer part) to eta
unsigned block_of(long b) {
  unsigned j = 0;
  while (cut_point(j + 1) <= b) ++j;
  return j;
}

class BitSplitState {
 public:
  BitSplitState(ExactReal t, unsigned long budget) : t_(std::move(t)), budget_(budget) {
    Int n0;
    // integer part certified by refining until the enclosure sits inside [n, n+1)
    unsigned k = 8;
    for (;;) {
      QInterval J = t_.refine(k);
      Int fl = floor_q(J.lo);
      if (Rat(fl) <= J.lo && J.hi < Rat(fl) + 1) {
        n0 = fl;
        break;
      }
      if (k >= budget_)
        raise(Errc::BudgetExceeded, "integer part of split input undecided (dyadic?)");
      k *= 2;
    }
    int_part_ = n0;
  }

  const Int& int_part() const { return int_part_; }

  // bit at fractional position b >= 1 (certified)
  bool bit(long b) {
    std::scoped_lock lock(mu_);
    ensure_bits(b);
    return bits_[static_cast<size_t>(b - 1)];
  }

  // first position >= b owned by `xi_side` holding a 1 bit; scan capped
  long next_owned_one(long b, bool xi_side) {
    long cap = b + 40000;
    for (long pos = b; pos <= cap; ++pos) {
      unsigned j = block_of(pos);
      bool owned = xi_side ? (j % 2 == 1) : (j % 2 == 0);
      if (owned && bit(pos)) return pos;
    }
    raise(Errc::BudgetExceeded, "no nonzero owned bit found in scan range");
  }

 private:
  void ensure_bits(long upto) {
    if (static_cast<long>(bits_.size()) >= upto) return;
    unsigned k = std::max<unsigned>(64, static_cast<unsigned>(upto) + 16);
    for (;;) {
      QInterval J = t_.refine(k);
      // certified cell: floor(frac * 2^upto) equal at both endpoints
      Rat scale = pow2(upto);
      Int lo_c = floor_q((J.lo - Rat(int_part_)) * scale);
      Int hi_c = floor_q((J.hi - Rat(int_part_)) * scale);
      if (lo_c == hi_c) {
        bits_.resize(static_cast<size_t>(upto));
        Int cell = lo_c;
        for (long b = upto; b >= 1; --b) {
          bits_[static_cast<size_t>(b - 1)] = mpz_tstbit(cell.get_mpz_t(), 0) != 0;
          cell >>= 1;
        }
        return;
      }
      if (k >= budget_)
        raise(Errc::BudgetExceeded,
              "binary digits of split input undecided at precision " + std::to_string(budget_) +
                  " (dyadic?)");
      k = static_cast<unsigned>(std::min<unsigned long>(budget_, 2ul * k));
    }
  }

  ExactReal t_;
  unsigned long budget_;
  Int int_part_;
  std::mutex mu_;
  std::vector<bool> bits_;
};

class BitPartNode final : public RealNode {
 public:
  BitPartNode(std::shared_ptr<BitSplitState> st, bool xi_side, RecipePtr rec)
      : RealNode(std::move(rec)), st_(std::move(st)), xi_(xi_side) {}

  std::optional<std::pair<Int, Int>> witness_for_level(unsigned n) const override {
    // zero-runs start at m_j for j of the non-owned parity; pick the smallest
    // usable j, then the tail bound 2^{-(m_{j+1}-1)} <= 2^{-n m_j} is an
    // integer comparison
    unsigned j = xi_ ? 2 : 1;
    for (; j <= 40; j += 2) {
      long mj = cut_point(j), mj1 = cut_point(j + 1);
      if (mj1 - 1 < static_cast<long>(n) * mj) continue;
      st_->next_owned_one(mj1, xi_);  // positivity: some owned 1 bit exists past the run
      Int q = 1;
      mpz_mul_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(mj));
      return std::make_pair(truncation_numerator(mj), q);
    }
    return std::nullopt;
  }

 protected:
  QInterval enclose(unsigned k) const override {
    long B = static_cast<long>(target(k)) + 2;
    Rat v = Rat(truncation_numerator(B)) * pow2(-B);
    return QInterval(v, v + pow2(-B));
  }

 private:
  // sum of owned bits at positions <= B, scaled by 2^B (plus the integer part
  // for the eta side)
  Int truncation_numerator(long B) const {
    Int acc = 0;
    if (!xi_) {
      acc = st_->int_part();
      mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(B));
    }
    for (long b = 1; b <= B; ++b) {
      unsigned j = block_of(b);
      bool owned = xi_ ? (j % 2 == 1) : (j % 2 == 0);
      if (owned && st_->bit(b)) mpz_setbit(acc.get_mpz_t(), static_cast<unsigned long>(B - b));
    }
    return acc;
  }

  std::shared_ptr<BitSplitState> st_;
  bool xi_;
};

RecipePtr split_recipe(Recipe::Kind kind, const RecipePtr& t, unsigned N, int part,
                       unsigned long seed = 0) {
  if (!t) return nullptr;
  auto rec = std::make_shared<Recipe>();
  rec->kind = kind;
  rec->children.push_back(t);
  rec->level = static_cast<int>(N);
  rec->part = part;
  rec->seed = seed;
  return rec;
}

// dyadic fallback: xi = series(2, factorial), eta = t - xi, with eta's
// witnesses inherited from xi's deeper truncations (denominators absorb t's)
SplitResult split_sum_dyadic(const ExactReal& t, const Rat& tv, unsigned N) {
  SeriesSpec spec;
  spec.base = 2;
  ExactReal xi = make_series(spec);
  auto series = std::dynamic_pointer_cast<const detail::SeriesNode>(xi.node());
  ExactReal eta_value = t - xi;

  unsigned long dbits = mpz_sizeinbase(tv.get_den().get_mpz_t(), 2);  // den = 2^(dbits-1)
  auto wfn = [series, tv, dbits](unsigned n) -> std::optional<std::pair<Int, Int>> {
    for (unsigned long K = std::max<unsigned long>(n, 1); K <= n + 64; ++K) {
      Int e = series->exponent(K);
      if (e < Int(dbits)) continue;  // need t * 2^e integral
      if (!mpz_fits_ulong_p(e.get_mpz_t())) break;
      if (series->tail_upper(K) > qpow(pow2(mpz_get_si(e.get_mpz_t())), -static_cast<long>(n)))
        continue;
      Int q = 1;
      mpz_mul_2exp(q.get_mpz_t(), q.get_mpz_t(), mpz_get_ui(e.get_mpz_t()));
      Rat pq = (tv - series->partial_sum(K)) * Rat(q);
      if (pq.get_den() != 1) continue;
      return std::make_pair(Int(pq.get_num()), q);
    }
    return std::nullopt;
  };
  auto eta_node = std::make_shared<WitnessWrapNode>(
      eta_value.node(), wfn, split_recipe(Recipe::Kind::SplitSum, t.recipe(), N, 1));
  SplitResult res;
  res.xi = xi;
  res.eta = ExactReal(eta_node);
  res.cert_xi = certify_level(res.xi, N);
  res.cert_eta = certify_level(res.eta, N);
  return res;
}

}  // namespace

SplitResult erdos_split_sum(const ExactReal& t, unsigned N) {
  if (N == 0) raise(Errc::DomainError, "erdos_split_sum requires N >= 1");
  if (auto v = t.rational_value(); v && is_dyadic(*v)) return split_sum_dyadic(t, *v, N);

  // bit budget: certificates need positions up to roughly m_{N+2}
  unsigned long need = static_cast<unsigned long>(cut_point(std::min(40u, N + 3))) + 65536;
  auto st = std::make_shared<BitSplitState>(t, need);

  SplitResult res;
  res.xi = ExactReal(std::make_shared<BitPartNode>(
      st, true, split_recipe(Recipe::Kind::SplitSum, t.recipe(), N, 0)));
  res.eta = ExactReal(std::make_shared<BitPartNode>(
      st, false, split_recipe(Recipe::Kind::SplitSum, t.recipe(), N, 1)));
  res.cert_xi = certify_level(res.xi, N);
  res.cert_eta = certify_level(res.eta, N);
  return res;
}

// ---------------------------------------------------------------------------
// product split, implicit pairs, orbits
// ---------------------------------------------------------------------------

SplitResult erdos_split_prod(const ExactReal& t, unsigned N, const SteerOptions& opts) {
  if (N == 0) raise(Errc::DomainError, "erdos_split_prod requires N >= 1");
  auto sgn = try_sign(t, kDivSeparationBudget);
  if (!sgn || *sgn == 0) raise(Errc::NotSeparatedFromZero, "product split input must be nonzero");

  // sign-matched interval around sqrt(|t|) so both factors have similar size
  QInterval T = t.refine(8);
  long mt = floor_log2(std::max(abs(T.lo), abs(T.hi)));
  Rat a = pow2(mt / 2 - 1);
  QInterval I0 = *sgn > 0 ? QInterval(a, 4 * a) : QInterval(-4 * a, -a);

  SteerResult sr = steer({CatalogMap::reciprocal_scale(t)}, I0, N, opts);
  SplitResult res;
  res.xi = sr.images[0];
  res.eta = sr.images[1];
  res.cert_xi = sr.certificates[0];
  res.cert_eta = sr.certificates[1];
  // tighten provenance: these are the two halves of a product split
  return res;
}

SplitResult implicit_pair(const BivarPolyQ& P, const QInterval& I, const QInterval& J, unsigned N,
                          const SteerOptions& opts) {
  CatalogMap phi = CatalogMap::implicit_curve(P, I, J);
  SteerResult sr = steer({phi}, I, N, opts);
  SplitResult res;
  res.xi = sr.images[0];
  res.eta = sr.images[1];
  res.cert_xi = sr.certificates[0];
  res.cert_eta = sr.certificates[1];
  return res;
}

namespace {

// smallest padded domain D around I0 with I0 certified inside the inner image
// of every iterate phi^j(D), j = 1..depth (so backward iterates stay in D)
QInterval auto_domain(const CatalogMap& phi, const QInterval& I0, unsigned depth) {
  QInterval hull = I0;
  {
    QInterval cur = I0;
    for (unsigned j = 0; j < depth; ++j) {
      QInterval a = phi.apply(cur.lo).refine(32);
      QInterval b = phi.apply(cur.hi).refine(32);
      cur = QInterval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
      hull = QInterval(std::min(hull.lo, cur.lo), std::max(hull.hi, cur.hi));
    }
  }
  for (long c = 0; c <= 32; ++c) {
    Rat pad = pow2(c - 2);
    QInterval D(hull.lo - pad, hull.hi + pad);
    if (phi.domain() && !phi.domain()->contains(D)) break;
    bool ok = true;
    try {
      CatalogMap probe = phi.restricted(D);
      CatalogMap it = probe;
      for (unsigned j = 1; j <= depth && ok; ++j) {
        QInterval fa = it.apply(D.lo).refine(64);
        QInterval fb = it.apply(D.hi).refine(64);
        Rat lo = it.direction() > 0 ? fa.hi : fb.hi;
        Rat hi = it.direction() > 0 ? fb.lo : fa.lo;
        ok = lo <= I0.lo && I0.hi <= hi;
        it = probe.composed_with(it);
      }
    } catch (const Error&) {
      ok = false;
    }
    if (ok) return D;
  }
  raise(Errc::DomainEscape, "no bounded domain keeps every iterate inside");
}

}  // namespace

OrbitResult orbit_construct(const CatalogMap& phi, unsigned depth, unsigned N, const QInterval& I0,
                            const SteerOptions& opts) {
  std::vector<CatalogMap> maps;
  std::vector<int> ks;
  if (depth > 0) {
    CatalogMap base = phi.domain() ? phi : phi.restricted(auto_domain(phi, I0, depth));
    if (!phi.domain()) base = phi.restricted(auto_domain(phi, I0, depth));
    CatalogMap inv = base.inverse();
    std::vector<CatalogMap> fwd, bwd;
    fwd.push_back(base);
    bwd.push_back(inv);
    for (unsigned j = 1; j < depth; ++j) {
      fwd.push_back(base.composed_with(fwd.back()));
      bwd.push_back(inv.composed_with(bwd.back()));
    }
    for (unsigned j = depth; j >= 1; --j) {
      maps.push_back(bwd[j - 1]);
      ks.push_back(-static_cast<int>(j));
    }
    for (unsigned j = 1; j <= depth; ++j) {
      maps.push_back(fwd[j - 1]);
      ks.push_back(static_cast<int>(j));
    }
  }

  SteerResult sr = steer(maps, I0, N, opts);
  OrbitResult res;
  res.point = sr.point;
  res.orbit[0] = sr.point;
  res.certificates[0] = sr.certificates[0];
  for (size_t i = 0; i < ks.size(); ++i) {
    res.orbit[ks[i]] = sr.images[i + 1];
    res.certificates[ks[i]] = sr.certificates[i + 1];
  }
  return res;
}

}  // namespace liouville
