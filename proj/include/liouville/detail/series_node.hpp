#ifndef LIOUVILLE_DETAIL_SERIES_NODE_HPP
#define LIOUVILLE_DETAIL_SERIES_NODE_HPP

#include <mutex>
#include <vector>

#include "liouville/detail/real_node.hpp"
#include "liouville/exact_real.hpp"

namespace liouville::detail {

// Sum_{k>=1} a_k b^{-e_k}. Partial sums are exact rationals with denominator
// b^{e_K}, and the tail is pinned between exact rational bounds, so witness
// extraction in liouville-core is pure integer arithmetic.
class SeriesNode final : public RealNode {
 public:
  explicit SeriesNode(SeriesSpec spec);

  const SeriesSpec& spec() const { return spec_; }

  Int exponent(unsigned long k) const;  // e_k, k >= 1
  Rat partial_sum(unsigned long K) const;  // S_K, K >= 0 (S_0 = 0)
  // Exact bounds on x - S_K:   0 < tail_lower(K) <= x - S_K <= tail_upper(K).
  Rat tail_upper(unsigned long K) const;   // maxd * b/(b-1) * b^{-e_{K+1}}
  Rat tail_lower(unsigned long K) const;   // a_{K'} b^{-e_{K'}}, first nonzero K' > K

  // Truncation witness: the smallest K with tail_upper(K) <= b^{-n e_K}
  // gives p/q = S_K with q = b^{e_K}; all comparisons exact.
  std::optional<std::pair<Int, Int>> witness_for_level(unsigned n) const override;

 protected:
  QInterval enclose(unsigned k) const override;

 private:
  Rat base_pow_neg(const Int& e) const;  // b^{-e}, e materializable

  SeriesSpec spec_;
  long fb_;       // floor(log2 base)
  long smargin_;  // ceil(log2(maxd * b/(b-1)))
  mutable std::mutex smu_;
  mutable std::vector<Rat> sums_;  // sums_[K] = S_K
  mutable std::vector<Int> exps_;  // exps_[k-1] = e_k
};

}  // namespace liouville::detail

#endif  // LIOUVILLE_DETAIL_SERIES_NODE_HPP
