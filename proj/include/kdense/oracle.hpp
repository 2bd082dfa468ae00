#pragma once

// Brute-force ground truth for tests and the `oracle` CLI subcommand.
// Deliberately shares no clique machinery with the solvers: everything here
// is plain exhaustive enumeration over an adjacency matrix.

#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kdense/combinatorics.hpp"
#include "kdense/error.hpp"
#include "kdense/graph.hpp"

namespace kdense::oracle {

struct OracleLimits {
  std::size_t max_nodes_subsets = 16;
  std::size_t max_nodes_cliques = 30;

  // KDENSE_ORACLE_MAX_SUBSETS / KDENSE_ORACLE_MAX_CLIQUES override the defaults.
  static OracleLimits from_env() {
    OracleLimits l;
    if (const char* s = std::getenv("KDENSE_ORACLE_MAX_SUBSETS")) l.max_nodes_subsets = std::stoul(s);
    if (const char* s = std::getenv("KDENSE_ORACLE_MAX_CLIQUES")) l.max_nodes_cliques = std::stoul(s);
    return l;
  }
};

using NodeSet = std::vector<NodeId>;

namespace detail {

inline void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw CapExceeded(std::string(what) + ": " + std::to_string(n) + " nodes exceeds the cap of " +
                      std::to_string(cap));
}

inline std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.n(), std::vector<char>(g.n(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

}  // namespace detail

// Every k-subset that is pairwise adjacent, as sorted node lists.
inline std::set<NodeSet> brute_cliques(const Graph& g, std::size_t k, const OracleLimits& lim = {}) {
  detail::check_cap(g.n(), lim.max_nodes_cliques, "brute_cliques");
  std::set<NodeSet> out;
  const std::size_t n = g.n();
  if (k == 0 || k > n) return out;
  auto adj = detail::adjacency_matrix(g);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k && ok; ++j) ok = adj[idx[i]][idx[j]] != 0;
    if (ok) out.insert(NodeSet(idx.begin(), idx.end()));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct DensestResult {
  NodeSet nodes;
  Density density;
};

// Exhaustive maximum of |C_k(S)| / |S| over all non-empty S. Among maximizers
// the largest one is returned (maximizers are closed under union, so this is
// the inclusion-maximal one).
inline DensestResult brute_densest(const Graph& g, std::size_t k, const OracleLimits& lim = {}) {
  detail::check_cap(g.n(), lim.max_nodes_subsets, "brute_densest");
  const std::size_t n = g.n();
  std::vector<std::uint32_t> masks;
  for (const auto& c : brute_cliques(g, k, {n, n})) {
    std::uint32_t m = 0;
    for (NodeId u : c) m |= 1U << u;
    masks.push_back(m);
  }
  DensestResult best;
  std::uint32_t best_mask = 0;
  for (std::uint32_t s = 1; s < (1U << n); ++s) {
    std::uint64_t cnt = 0;
    for (std::uint32_t m : masks) cnt += (m & s) == m;
    Density d{cnt, static_cast<std::uint64_t>(__builtin_popcount(s))};
    int cmp = compare(d, best.density);
    if (best_mask == 0 || cmp > 0 || (cmp == 0 && d.size > best.density.size)) {
      best.density = d;
      best_mask = s;
    }
  }
  for (NodeId u = 0; u < n; ++u)
    if (best_mask >> u & 1U) best.nodes.push_back(u);
  return best;
}

// All simple paths of k nodes along edges whose endpoint colors strictly
// decrease, as node sequences in path order.
inline std::set<NodeSet> brute_color_paths(const Graph& g, const Coloring& c, std::size_t k,
                                           const OracleLimits& lim = {}) {
  detail::check_cap(g.n(), lim.max_nodes_cliques, "brute_color_paths");
  std::set<NodeSet> out;
  if (k == 0) return out;
  auto adj = detail::adjacency_matrix(g);
  NodeSet path;
  auto extend = [&](auto& self) -> void {
    if (path.size() == k) {
      out.insert(path);
      return;
    }
    NodeId last = path.back();
    for (NodeId v = 0; v < g.n(); ++v)
      if (adj[last][v] && c.color[v] < c.color[last]) {
        path.push_back(v);
        self(self);
        path.pop_back();
      }
  };
  for (NodeId v = 0; v < g.n(); ++v) {
    path.assign(1, v);
    extend(extend);
  }
  return out;
}

}  // namespace kdense::oracle
