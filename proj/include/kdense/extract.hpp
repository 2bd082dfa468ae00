#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kdense/clique_count.hpp"
#include "kdense/combinatorics.hpp"
#include "kdense/fw.hpp"
#include "kdense/graph.hpp"
#include "kdense/sampler.hpp"

namespace kdense {

enum class DensityMode { Exact, Sampled, Estimated };

inline const char* to_string(DensityMode m) {
  switch (m) {
    case DensityMode::Exact: return "exact";
    case DensityMode::Sampled: return "sampled";
    case DensityMode::Estimated: return "estimated";
  }
  return "exact";
}

struct DensityReport {
  std::vector<NodeId> nodes;  // dense ids, in rank order
  std::size_t k = 0;
  DensityMode mode = DensityMode::Exact;
  Density exact;  // |C_k(nodes)| / |nodes| when known exactly
  bool exact_known = false;
  Density sampled;  // |C_k(nodes) ∩ sample| / |nodes|
  std::optional<long double> estimated;
  bool empty = false;  // no k-clique (or no sample) to report on

  double density() const {
    switch (mode) {
      case DensityMode::Exact: return exact.value();
      case DensityMode::Sampled: return sampled.value();
      case DensityMode::Estimated: return estimated ? static_cast<double>(*estimated) : 0.0;
    }
    return 0.0;
  }
};

// Nodes by non-increasing rank, smaller id first among equal ranks.
inline std::vector<NodeId> rank_sort(const RankVector& r) {
  std::vector<NodeId> order(r.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return r[a] != r[b] ? r[a] > r[b] : a < b; });
  return order;
}

// Exact prefix sweep. Adding node u to the prefix adds the (k-1)-cliques of
// N(u) ∩ prefix. Equal densities resolve to the larger prefix.
class ExactExtractor {
public:
  ExactExtractor(const Graph& g, const DegeneracyOrder& ord, std::size_t k,
                 std::optional<std::uint64_t> known_total = std::nullopt)
      : g_(&g), fwd_(g, ord), counter_(g, fwd_), k_(k), total_(known_total) {
    if (k < 2) throw DomainError("k must be at least 2");
  }

  // With `plateau_ranks`, densities are only compared where the rank changes
  // (a heuristic: it can miss the best prefix).
  DensityReport best_prefix(std::span<const NodeId> order, const RankVector* plateau_ranks = nullptr) {
    const std::size_t n = g_->n();
    if (order.size() != n) throw DomainError("order is not a permutation of the nodes");
    if (!total_) total_ = count_all();

    DensityReport rep;
    rep.k = k_;
    rep.mode = DensityMode::Exact;
    rep.exact_known = true;
    if (*total_ == 0) {
      rep.empty = true;
      return rep;
    }

    std::vector<char> in(n, 0);
    std::vector<NodeId> local;
    std::uint64_t count = 0;
    Density best;
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < n; ++i) {
      NodeId u = order[i];
      count = checked_add(count, admit(u, in, local));
      const Density here{count, i + 1};
      bool boundary = plateau_ranks == nullptr || i + 1 == n || (*plateau_ranks)[order[i + 1]] != (*plateau_ranks)[u];
      if (boundary && count > 0 && compare(here, best) >= 0) {
        best = here;
        best_size = i + 1;
      }
      // No larger prefix can beat total / (i + 2).
      if (best_size > 0 && static_cast<u128>(*total_) * best.size < static_cast<u128>(best.count) * (i + 2)) break;
    }
    rep.nodes.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_size));
    rep.exact = best;
    return rep;
  }

  // |C_k| of every prefix of `order`, by the same incremental step as the sweep.
  std::vector<std::uint64_t> prefix_counts(std::span<const NodeId> order) {
    std::vector<char> in(g_->n(), 0);
    std::vector<NodeId> local;
    std::vector<std::uint64_t> out;
    std::uint64_t count = 0;
    for (NodeId u : order) {
      count = checked_add(count, admit(u, in, local));
      out.push_back(count);
    }
    return out;
  }

  // |C_k(S)| for an arbitrary node set.
  std::uint64_t count_in(std::span<const NodeId> nodes) {
    std::vector<NodeId> sorted(nodes.begin(), nodes.end());
    std::sort(sorted.begin(), sorted.end());
    return counter_.count(sorted, k_);
  }

  std::uint64_t total() {
    if (!total_) total_ = count_all();
    return *total_;
  }

private:
  // Adds u to the prefix; returns the k-cliques it completes.
  std::uint64_t admit(NodeId u, std::vector<char>& in, std::vector<NodeId>& local) {
    local.clear();
    for (NodeId v : g_->neighbors(u))
      if (in[v]) local.push_back(v);
    in[u] = 1;
    return counter_.count(local, k_ - 1);
  }

  std::uint64_t count_all() {
    std::uint64_t t = 0;
    for (NodeId v = 0; v < g_->n(); ++v) t = checked_add(t, counter_.count(fwd_.out(v), k_ - 1));
    return t;
  }

  const Graph* g_;
  ForwardAdjacency fwd_;
  SubsetCliqueCounter counter_;
  std::size_t k_;
  std::optional<std::uint64_t> total_;
};

inline DensityReport best_prefix_exact(const Graph& g, std::span<const NodeId> order, std::size_t k) {
  ExactExtractor ex(g, degeneracy_order(g), k);
  return ex.best_prefix(order);
}

// One sweep over the sampled cliques: a clique enters the prefix with its
// last member. Maximizes the sampled density; equal values resolve to the
// larger prefix. The estimated true density of the chosen prefix is attached.
inline DensityReport best_prefix_sampled(std::span<const NodeId> order, const SampleSet& s) {
  DensityReport rep;
  rep.k = s.k;
  rep.mode = DensityMode::Estimated;
  if (s.empty()) {
    rep.empty = true;
    return rep;
  }
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::vector<std::uint64_t> completes(order.size(), 0);
  for (std::size_t c = 0; c < s.size(); ++c) {
    std::size_t last = 0;
    for (NodeId u : s.clique(c)) last = std::max(last, pos[u]);
    ++completes[last];
  }
  std::uint64_t count = 0;
  Density best;
  std::size_t best_size = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    count += completes[i];
    const Density here{count, i + 1};
    if (count > 0 && compare(here, best) >= 0) {
      best = here;
      best_size = i + 1;
    }
  }
  rep.nodes.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_size));
  rep.sampled = best;
  rep.estimated = estimate_true_density(s, rep.nodes, order.size());
  return rep;
}

// Convergence test on exact extraction: same chosen prefix for both vectors.
inline bool converged(ExactExtractor& ex, const RankVector& prev, const RankVector& cur) {
  return converged(prev, cur, [&](const RankVector& r) {
    auto order = rank_sort(r);
    return ex.best_prefix(order).nodes;
  });
}

// Runs solver passes until the chosen prefix has stayed the same for
// `patience` consecutive passes, or `cap` passes in total. With patience 1
// this stops at the first pass where converged() holds.
template <class Solver>
std::uint32_t run_until_stable(Solver& solver, ExactExtractor& ex, std::uint32_t cap, std::uint32_t patience = 1) {
  auto chosen = [&] {
    auto v = ex.best_prefix(rank_sort(solver.ranks())).nodes;
    std::sort(v.begin(), v.end());
    return v;
  };
  solver.pass();
  auto prev = chosen();
  std::uint32_t stable = 0;
  while (solver.ranks().iterations_done < cap) {
    solver.pass();
    auto cur = chosen();
    if (cur == prev) {
      if (++stable >= patience) break;
    } else {
      stable = 0;
      prev = std::move(cur);
    }
  }
  return solver.ranks().iterations_done;
}

}  // namespace kdense
