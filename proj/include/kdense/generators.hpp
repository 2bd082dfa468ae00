#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "kdense/graph.hpp"

namespace kdense::gen {

// Erdos-Renyi G(n, p). Isolated nodes are kept.
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

// G(n, p) with a clique planted on the `clique_nodes` given.
inline Graph planted(std::size_t n, double p, const std::vector<NodeId>& clique_nodes,
                     std::uint64_t seed) {
  Graph base = gnp(n, p, seed);
  auto edges = base.edges();
  for (std::size_t i = 0; i < clique_nodes.size(); ++i)
    for (std::size_t j = i + 1; j < clique_nodes.size(); ++j)
      edges.emplace_back(clique_nodes[i], clique_nodes[j]);
  return Graph::from_edges(n, std::move(edges));
}

// Chung-Lu style graph with a power-law expected degree sequence. Produces
// roughly n * avg_degree / 2 edges with heavy-tailed degrees.
inline Graph power_law(std::size_t n, double avg_degree, double exponent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> w(n);
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::pow(static_cast<double>(i + 1), -1.0 / (exponent - 1.0));
    sum += w[i];
  }
  const double scale = avg_degree * static_cast<double>(n) / sum;
  std::vector<double> cumulative(n);
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] *= scale;
    acc += w[i];
    cumulative[i] = acc;
  }
  const auto target = static_cast<std::size_t>(acc / 2.0);
  std::uniform_real_distribution<double> pick(0.0, acc);
  auto draw = [&] {
    auto it = std::lower_bound(cumulative.begin(), cumulative.end(), pick(rng));
    return static_cast<NodeId>(std::min<std::size_t>(it - cumulative.begin(), n - 1));
  };
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(target);
  for (std::size_t i = 0; i < target; ++i) edges.emplace_back(draw(), draw());
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace kdense::gen
