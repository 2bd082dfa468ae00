#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "kdense/clique_count.hpp"
#include "kdense/combinatorics.hpp"
#include "kdense/error.hpp"
#include "kdense/graph.hpp"

namespace kdense {

// Non-owning view of one succinct-clique-tree pair (V_h, V_p). The pair
// encodes every clique hold + C' for C' a subset of pivots.
struct PairView {
  std::span<const NodeId> hold;
  std::span<const NodeId> pivots;

  std::size_t size() const noexcept { return hold.size() + pivots.size(); }
};

// Owning pair, handy for building pairs by hand.
struct SctPair {
  std::vector<NodeId> hold;
  std::vector<NodeId> pivots;

  operator PairView() const noexcept { return {hold, pivots}; }
};

// Flat sequence of pairs. Pairs are never queried as a tree, so only the
// hold/pivot node runs are kept.
class SctForest {
public:
  std::size_t eta() const noexcept { return hold_sizes_.size(); }

  PairView pair(std::size_t i) const noexcept {
    const NodeId* base = nodes_.data() + offsets_[i];
    const std::size_t h = hold_sizes_[i];
    const std::size_t total = offsets_[i + 1] - offsets_[i];
    return {{base, h}, {base + h, total - h}};
  }

  // 0 when the forest is unfiltered, otherwise the k it was filtered for.
  std::uint32_t k_filter() const noexcept { return k_filter_; }
  std::size_t node_count() const noexcept { return n_; }

  void add(std::span<const NodeId> hold, std::span<const NodeId> pivots) {
    nodes_.insert(nodes_.end(), hold.begin(), hold.end());
    nodes_.insert(nodes_.end(), pivots.begin(), pivots.end());
    hold_sizes_.push_back(static_cast<std::uint32_t>(hold.size()));
    offsets_.push_back(nodes_.size());
  }

  void reserve(std::size_t pairs, std::size_t nodes) {
    hold_sizes_.reserve(pairs);
    offsets_.reserve(pairs + 1);
    nodes_.reserve(nodes);
  }

  void set_meta(std::size_t n, std::uint32_t k_filter) {
    n_ = n;
    k_filter_ = k_filter;
  }

  friend bool operator==(const SctForest&, const SctForest&) = default;

private:
  std::vector<std::uint64_t> offsets_{0};
  std::vector<std::uint32_t> hold_sizes_;
  std::vector<NodeId> nodes_;
  std::size_t n_ = 0;
  std::uint32_t k_filter_ = 0;
};

// Builds the succinct clique tree: one pivot recursion per node v, in
// degeneracy order, over v's later neighbors with v held. Every pair has
// |V(P)| <= delta + 1 and both sides sorted by id.
//
// prune_k > 0 skips subtrees that hold no prune_k-clique; the result then
// equals filter_pairs(build_sct(g, ord), prune_k).
inline SctForest build_sct(const Graph& g, const DegeneracyOrder& ord, std::size_t prune_k = 0) {
  ForwardAdjacency fwd(g, ord);
  detail::LocalGraph local(g.n());
  detail::PivotRecursion rec;
  SctForest forest;
  forest.set_meta(g.n(), static_cast<std::uint32_t>(prune_k));
  std::vector<NodeId> hold, pivots;

  for (NodeId v : ord.order) {
    if (prune_k > 0 && fwd.out(v).size() + 1 < prune_k) continue;
    local.build(fwd, fwd.out(v));
    rec.run(local, prune_k, 1, [&](std::span<const std::uint32_t> h, std::span<const std::uint32_t> p) {
      hold.assign(1, v);
      for (auto i : h) hold.push_back(local.global(i));
      pivots.clear();
      for (auto i : p) pivots.push_back(local.global(i));
      std::sort(hold.begin(), hold.end());
      std::sort(pivots.begin(), pivots.end());
      forest.add(hold, pivots);
    });
  }
  return forest;
}

// Keeps exactly the pairs with |V_h| <= k and |V(P)| >= k.
inline SctForest filter_pairs(const SctForest& f, std::size_t k) {
  SctForest out;
  out.set_meta(f.node_count(), static_cast<std::uint32_t>(k));
  for (std::size_t i = 0; i < f.eta(); ++i) {
    PairView p = f.pair(i);
    if (p.hold.size() <= k && p.size() >= k) out.add(p.hold, p.pivots);
  }
  return out;
}

namespace detail {
inline void check_pair_domain(const PairView& p, std::size_t k) {
  if (k < p.hold.size() || k > p.size())
    throw DomainError("k=" + std::to_string(k) + " outside [" + std::to_string(p.hold.size()) + ", " +
                      std::to_string(p.size()) + "] for this pair");
}
}  // namespace detail

// Number of k-cliques the pair encodes: C(|V_p|, k - |V_h|).
inline std::uint64_t pair_count(const PairView& p, std::size_t k) {
  detail::check_pair_domain(p, k);
  return binomial(static_cast<std::int64_t>(p.pivots.size()), static_cast<std::int64_t>(k - p.hold.size()));
}

// k-cliques of the pair containing a given hold node.
inline std::uint64_t hold_coverage(const PairView& p, std::size_t k) { return pair_count(p, k); }

// k-cliques of the pair containing a given pivot node.
inline std::uint64_t pivot_coverage(const PairView& p, std::size_t k) {
  detail::check_pair_domain(p, k);
  return binomial(static_cast<std::int64_t>(p.pivots.size()) - 1,
                  static_cast<std::int64_t>(k - p.hold.size()) - 1);
}

// Visits each k-clique of the pair once, in lexicographic order of the chosen
// pivot subset. The clique lists hold nodes first, then the chosen pivots.
template <class Visit>
void enumerate_pair_cliques(const PairView& p, std::size_t k, Visit&& visit) {
  detail::check_pair_domain(p, k);
  const std::size_t need = k - p.hold.size();
  const std::size_t np = p.pivots.size();
  std::vector<NodeId> clique(p.hold.begin(), p.hold.end());
  clique.resize(k);
  std::vector<std::size_t> idx(need);
  for (std::size_t i = 0; i < need; ++i) idx[i] = i;
  const std::size_t h = p.hold.size();
  while (true) {
    for (std::size_t i = 0; i < need; ++i) clique[h + i] = p.pivots[idx[i]];
    visit(std::span<const NodeId>(clique));
    // Advance to the next combination.
    std::size_t i = need;
    while (i > 0 && idx[i - 1] == np - need + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < need; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Σ_P pair_count over a k-filtered forest, i.e. |C_k(V)|.
inline std::uint64_t total_pair_count(const SctForest& f, std::size_t k) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < f.eta(); ++i) total = checked_add(total, pair_count(f.pair(i), k));
  return total;
}

}  // namespace kdense
