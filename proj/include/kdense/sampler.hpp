#pragma once

// Uniform k-clique sampling through k-color paths, and the SPath solver.
//
// Under a proper coloring every edge is oriented from the higher to the lower
// color. A k-color path is then a directed path of k nodes; its colors are
// strictly decreasing, hence pairwise distinct. A k-clique, read in
// decreasing color order, is exactly one such path, so uniform path samples
// that happen to be cliques are uniform over cliques.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "kdense/combinatorics.hpp"
#include "kdense/error.hpp"
#include "kdense/fw.hpp"
#include "kdense/graph.hpp"

namespace kdense {

class ColorDag {
public:
  ColorDag(const Graph& g, const Coloring& c) {
    offsets_.assign(g.n() + 1, 0);
    for (NodeId u = 0; u < g.n(); ++u)
      for (NodeId v : g.neighbors(u)) {
        if (c.color[u] == c.color[v]) throw DomainError("coloring is not proper");
        if (c.color[u] > c.color[v]) ++offsets_[u + 1];
      }
    for (std::size_t i = 0; i < g.n(); ++i) offsets_[i + 1] += offsets_[i];
    out_.resize(offsets_.back());
    for (NodeId u = 0; u < g.n(); ++u) {
      std::size_t at = offsets_[u];
      for (NodeId v : g.neighbors(u))
        if (c.color[u] > c.color[v]) out_[at++] = v;
    }
  }

  std::size_t n() const noexcept { return offsets_.size() - 1; }
  std::span<const NodeId> out(NodeId u) const noexcept {
    return {out_.data() + offsets_[u], out_.data() + offsets_[u + 1]};
  }

private:
  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> out_;
};

// cnt(v, i): number of color-descending paths with i nodes starting at v.
class PathCounts {
public:
  PathCounts(const Graph& g, const Coloring& c, std::size_t k)
      : dag_(g, c), k_(k), n_(g.n()) {
    if (k < 2) throw DomainError("color paths need k >= 2");
    table_.assign(n_ * k_, 0);
    for (NodeId v = 0; v < n_; ++v) at(v, 1) = 1;
    for (std::size_t i = 2; i <= k_; ++i) {
      for (NodeId v = 0; v < n_; ++v) {
        u128 sum = 0;
        for (NodeId u : dag_.out(v)) sum = add(sum, at(u, i - 1));
        at(v, i) = sum;
      }
    }
    start_cumulative_.resize(n_);
    u128 acc = 0;
    for (NodeId v = 0; v < n_; ++v) {
      acc = add(acc, at(v, k_));
      start_cumulative_[v] = acc;
    }
    total_ = acc;
  }

  std::size_t k() const noexcept { return k_; }
  u128 total() const noexcept { return total_; }
  u128 count(NodeId v, std::size_t len) const noexcept { return table_[v * k_ + (len - 1)]; }
  const ColorDag& dag() const noexcept { return dag_; }

  // Cumulative start weights, for inverse-CDF selection of the first node.
  const std::vector<u128>& start_cumulative() const noexcept { return start_cumulative_; }

private:
  static u128 add(u128 a, u128 b) {
    if (b > std::numeric_limits<u128>::max() - a)
      throw OverflowError("color-path count exceeds 128 bits; use a smaller k or graph");
    return a + b;
  }
  u128& at(NodeId v, std::size_t len) { return table_[v * k_ + (len - 1)]; }

  ColorDag dag_;
  std::size_t k_;
  std::size_t n_;
  std::vector<u128> table_;
  std::vector<u128> start_cumulative_;
  u128 total_ = 0;
};

inline PathCounts count_color_paths(const Graph& g, const Coloring& c, std::size_t k) { return PathCounts(g, c, k); }

// Uniform integer in [0, bound) for 128-bit bounds, by rejection.
inline u128 uniform_below(u128 bound, Rng& rng) {
  if (bound == 0) throw DomainError("empty range");
  if (bound <= std::numeric_limits<std::uint64_t>::max()) {
    std::uniform_int_distribution<std::uint64_t> d(0, static_cast<std::uint64_t>(bound - 1));
    return d(rng);
  }
  // Accept x below the largest multiple of bound.
  const u128 limit = std::numeric_limits<u128>::max() - (std::numeric_limits<u128>::max() % bound);
  while (true) {
    u128 x = (static_cast<u128>(rng()) << 64) | rng();
    if (x < limit) return x % bound;
  }
}

// One uniform draw from all k-color paths; nodes in path order.
inline void sample_color_path(const PathCounts& pc, Rng& rng, std::vector<NodeId>& path) {
  if (pc.total() == 0) throw DomainError("no k-color paths");
  const auto& cum = pc.start_cumulative();
  u128 x = uniform_below(pc.total(), rng);
  auto it = std::upper_bound(cum.begin(), cum.end(), x);
  auto v = static_cast<NodeId>(it - cum.begin());
  path.assign(1, v);
  for (std::size_t remaining = pc.k(); remaining > 1; --remaining) {
    u128 y = uniform_below(pc.count(v, remaining), rng);
    NodeId next = v;
    for (NodeId u : pc.dag().out(v)) {
      u128 w = pc.count(u, remaining - 1);
      if (y < w) {
        next = u;
        break;
      }
      y -= w;
    }
    v = next;
    path.push_back(v);
  }
}

inline std::vector<NodeId> sample_color_path(const PathCounts& pc, Rng& rng) {
  std::vector<NodeId> path;
  sample_color_path(pc, rng, path);
  return path;
}

// Deduplicated sampled k-cliques. `multiplicity[i]` counts how many draws hit
// clique i, so the draws can be reweighted for unbiased estimates.
struct SampleSet {
  std::size_t k = 0;
  std::uint64_t t = 0;     // path draws
  std::uint64_t hits = 0;  // draws that were cliques
  u128 paths_total = 0;    // W
  std::vector<NodeId> flat;  // k sorted ids per clique, cliques in lexicographic order
  std::vector<std::uint64_t> multiplicity;

  std::size_t size() const noexcept { return multiplicity.size(); }
  bool empty() const noexcept { return multiplicity.empty(); }
  std::span<const NodeId> clique(std::size_t i) const noexcept { return {flat.data() + i * k, k}; }

  // hits / t, the estimate of p'.
  double hit_rate() const { return t == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(t); }
  // W * hits / t, an unbiased estimate of |C_k(V)|.
  long double clique_estimate() const {
    return t == 0 ? 0.0L : static_cast<long double>(paths_total) * hits / static_cast<long double>(t);
  }
};

inline bool is_clique(const Graph& g, std::span<const NodeId> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (!g.has_edge(nodes[i], nodes[j])) return false;
  return true;
}

inline SampleSet sample_k_cliques(const Graph& g, const PathCounts& pc, std::uint64_t t, Rng& rng) {
  SampleSet s;
  s.k = pc.k();
  s.paths_total = pc.total();
  if (pc.total() == 0) return s;
  s.t = t;
  std::vector<NodeId> path, raw;
  for (std::uint64_t i = 0; i < t; ++i) {
    sample_color_path(pc, rng, path);
    if (!is_clique(g, path)) continue;
    ++s.hits;
    std::sort(path.begin(), path.end());
    raw.insert(raw.end(), path.begin(), path.end());
  }
  const std::size_t k = s.k;
  std::vector<std::size_t> idx(raw.size() / k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(raw.begin() + a * k, raw.begin() + (a + 1) * k, raw.begin() + b * k,
                                        raw.begin() + (b + 1) * k);
  };
  std::sort(idx.begin(), idx.end(), less);
  for (std::size_t j = 0; j < idx.size(); ++j) {
    auto begin = raw.begin() + idx[j] * k;
    if (j > 0 && std::equal(begin, begin + k, s.flat.end() - k)) {
      ++s.multiplicity.back();
      continue;
    }
    s.flat.insert(s.flat.end(), begin, begin + k);
    s.multiplicity.push_back(1);
  }
  return s;
}

inline SampleSet sample_k_cliques(const Graph& g, const Coloring& c, std::size_t k, std::uint64_t t, Rng& rng) {
  return sample_k_cliques(g, PathCounts(g, c, k), t, rng);
}

struct SpathResult {
  RankVector ranks;
  SampleSet samples;
};

// SPath: sample t color paths, keep the distinct cliques, then T kCL passes
// over them. An empty sample yields all-zero ranks.
inline SpathResult spath_run(const Graph& g, const Coloring& c, std::size_t k, std::uint64_t t,
                             std::uint32_t iterations, FwOptions opt = {}) {
  Rng rng(opt.seed);
  SpathResult out;
  out.samples = sample_k_cliques(g, c, k, t, rng);
  const SampleSet& s = out.samples;
  auto source = [&s](auto&& visit) {
    for (std::size_t i = 0; i < s.size(); ++i) visit(s.clique(i));
  };
  FwOptions kcl_opt = opt;
  kcl_opt.seed = opt.seed ^ 0x9E3779B97F4A7C15ULL;
  out.ranks = kcl_run(source, g.n(), iterations, kcl_opt);
  return out;
}

// Rescales the sampled cliques inside `chosen` to the true-density scale:
// (draws landing in chosen) * W / t / |chosen|.
inline long double estimate_true_density(const SampleSet& s, std::span<const NodeId> chosen, std::size_t n) {
  if (chosen.empty()) throw DomainError("density of an empty node set");
  if (s.t == 0 || s.empty()) return 0.0L;
  std::vector<char> in(n, 0);
  for (NodeId u : chosen) in[u] = 1;
  std::uint64_t inside = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto c = s.clique(i);
    if (std::all_of(c.begin(), c.end(), [&](NodeId u) { return in[u] != 0; })) inside += s.multiplicity[i];
  }
  return static_cast<long double>(inside) * static_cast<long double>(s.paths_total) / static_cast<long double>(s.t) /
         static_cast<long double>(chosen.size());
}

// Sample size for an (eps, theta)-approximation in expectation:
// t >= -3 |V| ln(eps / 4) / (p' theta^2), where p' is the clique hit rate.
inline std::uint64_t recommend_samples(double eps, double theta, std::size_t n, double hit_rate) {
  if (!(eps > 0 && eps < 1) || !(theta > 0 && theta < 1)) throw DomainError("eps and theta must lie in (0, 1)");
  if (!(hit_rate > 0)) throw DomainError("hit rate must be positive; the pilot run found no cliques");
  double t = -3.0 * static_cast<double>(n) * std::log(eps / 4.0) / (hit_rate * theta * theta);
  return static_cast<std::uint64_t>(std::ceil(t));
}

}  // namespace kdense
