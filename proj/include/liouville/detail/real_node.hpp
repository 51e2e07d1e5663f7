#ifndef LIOUVILLE_DETAIL_REAL_NODE_HPP
#define LIOUVILLE_DETAIL_REAL_NODE_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "liouville/interval.hpp"

namespace liouville {
struct Recipe;
using RecipePtr = std::shared_ptr<const Recipe>;
}  // namespace liouville

namespace liouville::detail {

// One node of a refinable-value DAG. refine(k) returns the chain interval
//
//   J(0) = enclose(0),   J(k) = J(k-1)              if width(J(k-1)) <= 2^-k
//                        J(k) = J(k-1) /\ enclose(k) otherwise,
//
// which is a pure function of (construction data, k): nested, deterministic,
// width(J(k)) <= 2^-k. Only strict refinements are stored, so the memo stays
// proportional to the number of enclose() calls, not to k.
//
// Subclass contract for enclose(k): return an interval containing the value
// with width <= 2^-(k+1). Tighter is better (it fast-forwards the chain);
// implementations overshoot via target(). enclose() is called with strictly
// increasing k, under the node lock, so stateful refinement (partial sums,
// steering stages) needs no extra synchronization.
class RealNode {
 public:
  explicit RealNode(RecipePtr recipe = nullptr) : recipe_(std::move(recipe)) {}
  virtual ~RealNode() = default;

  QInterval refine(unsigned k) const;
  const RecipePtr& recipe() const { return recipe_; }

  // Exact rational value, if this node is known to be a point.
  virtual std::optional<Rat> rational_value() const;

  // Provenance hook for liouville-core's witness search: nodes built by a
  // construction that proves approximation levels (series constants, steered
  // points, split parts) return the level-n witness (p, q) here. Values with
  // no structural witnesses return nullopt and the search falls back to
  // continued-fraction convergents.
  virtual std::optional<std::pair<Int, Int>> witness_for_level(unsigned n) const {
    (void)n;
    return std::nullopt;
  }

 protected:
  virtual QInterval enclose(unsigned k) const = 0;

  // Internal width goal for enclose(k): geometric overshoot keeps the number
  // of chain entries logarithmic in the deepest precision ever queried.
  static unsigned target(unsigned k) { return k + k / 8 + 8; }

 private:
  mutable std::mutex mu_;
  mutable std::vector<std::pair<unsigned, QInterval>> chain_;
  mutable long cover_ = -1;
  RecipePtr recipe_;
};

using NodePtr = std::shared_ptr<const RealNode>;

}  // namespace liouville::detail

#endif  // LIOUVILLE_DETAIL_REAL_NODE_HPP
