#pragma once

#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kdense/kdense.hpp"

namespace kdense::testing {

inline Graph from_text(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

inline Graph make_graph(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges) {
  return Graph::from_edges(n, edges);
}

inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph complete(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make_graph(n, e);
}

// The 7-node example graph whose SCT is the five pairs
// ({u0},{u1,u3}) ({u1},{u2,u3,u6}) ({u2},{u3,u6}) ({u3},{u4,u5,u6}) ({u4},{u5,u6}).
inline Graph example_graph() {
  return make_graph(7, {{0, 1}, {0, 3}, {1, 3}, {1, 2}, {1, 6}, {2, 3}, {2, 6},
                        {3, 6}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
}

// K5 on nodes 0..4 plus node 5 hanging off node 0.
inline Graph k5_pendant() {
  auto g = complete(5).edges();
  g.emplace_back(0, 5);
  return make_graph(6, g);
}

// Every clique encoded by a forest (all sizes), with multiplicity.
inline std::multiset<std::vector<NodeId>> encoded_cliques(const SctForest& f) {
  std::multiset<std::vector<NodeId>> out;
  for (std::size_t i = 0; i < f.eta(); ++i) {
    PairView p = f.pair(i);
    for (std::size_t k = p.hold.size(); k <= p.size(); ++k) {
      if (k == 0) continue;
      enumerate_pair_cliques(p, k, [&](std::span<const NodeId> c) {
        std::vector<NodeId> v(c.begin(), c.end());
        std::sort(v.begin(), v.end());
        out.insert(v);
      });
    }
  }
  return out;
}

inline std::multiset<std::vector<NodeId>> encoded_k_cliques(const SctForest& f, std::size_t k) {
  std::multiset<std::vector<NodeId>> out;
  for (std::size_t i = 0; i < f.eta(); ++i) {
    PairView p = f.pair(i);
    if (p.hold.size() > k || p.size() < k) continue;
    enumerate_pair_cliques(p, k, [&](std::span<const NodeId> c) {
      std::vector<NodeId> v(c.begin(), c.end());
      std::sort(v.begin(), v.end());
      out.insert(v);
    });
  }
  return out;
}

}  // namespace kdense::testing
