#pragma once

// Frank-Wolfe solvers for k-clique densest subgraph: per-clique updates (kCL)
// and per-pair batch updates over the succinct clique tree (PSCTL / IBatch).
// All weights are integers; every update adds whole units.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "kdense/combinatorics.hpp"
#include "kdense/graph.hpp"
#include "kdense/sct.hpp"

namespace kdense {

using Rank = std::uint64_t;
using Rng = std::mt19937_64;

struct RankVector {
  std::vector<Rank> r;
  std::uint32_t iterations_done = 0;

  RankVector() = default;
  explicit RankVector(std::size_t n) : r(n, 0) {}

  std::size_t size() const noexcept { return r.size(); }
  Rank operator[](std::size_t i) const noexcept { return r[i]; }
  Rank total() const {
    Rank s = 0;
    for (Rank x : r) s = checked_add(s, x);
    return s;
  }
};

enum class TieMode { Random, SmallestId };

struct FwOptions {
  std::uint64_t seed = 0;
  TieMode tie = TieMode::Random;
  bool shuffle_pairs = false;  // PSCTL only
};

// Nodes of one pair grouped by current rank, lowest rank first.
struct PlateauPartition {
  std::vector<NodeId> members;      // sorted by (rank, id)
  std::vector<std::size_t> starts;  // group i is members[starts[i], starts[i+1])
  std::vector<Rank> ranks;          // strictly increasing

  std::size_t groups() const noexcept { return ranks.size(); }
  std::span<const NodeId> group(std::size_t i) const noexcept {
    return {members.data() + starts[i], members.data() + starts[i + 1]};
  }
};

inline PlateauPartition make_plateaus(const RankVector& r, std::span<const NodeId> nodes) {
  PlateauPartition pp;
  pp.members.assign(nodes.begin(), nodes.end());
  std::sort(pp.members.begin(), pp.members.end(),
            [&](NodeId a, NodeId b) { return r[a] != r[b] ? r[a] < r[b] : a < b; });
  for (std::size_t i = 0; i < pp.members.size(); ++i) {
    if (i == 0 || r[pp.members[i]] != pp.ranks.back()) {
      pp.starts.push_back(i);
      pp.ranks.push_back(r[pp.members[i]]);
    }
  }
  pp.starts.push_back(pp.members.size());
  return pp;
}

// Per-node capacity of one IBatch call: C(|V_p|, k-|V_h|) for hold nodes and
// C(|V_p|-1, k-|V_h|-1) for pivot nodes.
struct UpperBounds {
  std::uint64_t hold_cap = 0;
  std::uint64_t pivot_cap = 0;

  static UpperBounds of(const PairView& p, std::size_t k) { return {hold_coverage(p, k), pivot_coverage(p, k)}; }
};

// Water-filling of one pair's clique weight onto its lowest rank plateaus.
// Keeps scratch buffers so repeated calls do not allocate.
class IBatch {
public:
  IBatch(std::size_t k, TieMode tie = TieMode::Random) : k_(k), tie_(tie) {}

  void apply(RankVector& r, const PairView& p, Rng& rng) {
    const std::uint64_t total = pair_count(p, k_);
    const UpperBounds caps = UpperBounds::of(p, k_);

    nodes_.clear();
    for (NodeId u : p.hold) nodes_.push_back({u, caps.hold_cap});
    for (NodeId u : p.pivots) nodes_.push_back({u, caps.pivot_cap});
    std::sort(nodes_.begin(), nodes_.end(), [&](const Slot& a, const Slot& b) {
      return r.r[a.node] != r.r[b.node] ? r.r[a.node] < r.r[b.node] : a.node < b.node;
    });
    starts_.clear();
    levels_.clear();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (i == 0 || r.r[nodes_[i].node] != levels_.back()) {
        starts_.push_back(i);
        levels_.push_back(r.r[nodes_[i].node]);
      }
    }
    starts_.push_back(nodes_.size());

    std::uint64_t remaining = total;
    const std::size_t s = levels_.size();
    current_.clear();
    for (std::size_t i = 0; i < s && remaining > 0; ++i) {
      // Merge plateau i into the potential set; zero-capacity nodes never enter.
      for (std::size_t j = starts_[i]; j < starts_[i + 1]; ++j)
        if (nodes_[j].up > 0) current_.push_back(j);
      std::uint64_t gap =
          (i + 1 < s) ? levels_[i + 1] - levels_[i] : std::numeric_limits<std::uint64_t>::max();

      while (remaining > 0 && gap > 0 && !current_.empty()) {
        std::uint64_t min_up = std::numeric_limits<std::uint64_t>::max();
        for (std::size_t j : current_) min_up = std::min(min_up, nodes_[j].up);
        const std::uint64_t w = std::min({min_up, gap, remaining / current_.size()});
        if (w > 0) {
          for (std::size_t j : current_) {
            r.r[nodes_[j].node] = checked_add(r.r[nodes_[j].node], w);
            nodes_[j].up -= w;
          }
          remaining -= w * current_.size();
          gap -= w;
        } else {
          give_one_each(r, static_cast<std::size_t>(remaining), rng);
          remaining = 0;
        }
        std::erase_if(current_, [&](std::size_t j) { return nodes_[j].up == 0; });
      }
      // Survivors now sit at level i+1 and carry over to the next plateau.
    }
    if (remaining > 0) throw Error("IBatch: pair capacity exhausted before its weight was placed");
  }

private:
  struct Slot {
    NodeId node;
    std::uint64_t up;
  };

  // +1 to `count` distinct members of current_ (count < |current_|).
  void give_one_each(RankVector& r, std::size_t count, Rng& rng) {
    if (tie_ == TieMode::SmallestId) {
      std::sort(current_.begin(), current_.end(),
                [&](std::size_t a, std::size_t b) { return nodes_[a].node < nodes_[b].node; });
    } else {
      for (std::size_t i = 0; i < count; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, current_.size() - 1);
        std::swap(current_[i], current_[pick(rng)]);
      }
    }
    for (std::size_t i = 0; i < count; ++i) {
      Slot& slot = nodes_[current_[i]];
      r.r[slot.node] += 1;
      slot.up -= 1;
    }
  }

  std::size_t k_;
  TieMode tie_;
  std::vector<Slot> nodes_;
  std::vector<std::size_t> starts_;
  std::vector<Rank> levels_;
  std::vector<std::size_t> current_;
};

inline void ibatch(RankVector& r, const PairView& p, std::size_t k, Rng& rng, TieMode tie = TieMode::Random) {
  IBatch(k, tie).apply(r, p, rng);
}

// PSCTL: every pass runs IBatch over all pairs of a k-filtered forest, in
// storage order unless shuffle_pairs is set.
class Psctl {
public:
  Psctl(const SctForest& forest, std::size_t n, std::size_t k, FwOptions opt = {})
      : forest_(&forest), k_(k), opt_(opt), rng_(opt.seed), batch_(k, opt.tie), ranks_(n) {
    if (forest.k_filter() != 0 && forest.k_filter() != k)
      throw DomainError("forest filtered for k=" + std::to_string(forest.k_filter()) + ", solver asked for k=" +
                        std::to_string(k));
    order_.resize(forest.eta());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
  }

  void pass() {
    if (opt_.shuffle_pairs) std::shuffle(order_.begin(), order_.end(), rng_);
    for (std::size_t i : order_) {
      PairView p = forest_->pair(i);
      if (p.hold.size() > k_ || p.size() < k_) continue;  // tolerate unfiltered forests
      batch_.apply(ranks_, p, rng_);
    }
    ++ranks_.iterations_done;
  }

  const RankVector& ranks() const noexcept { return ranks_; }

private:
  const SctForest* forest_;
  std::size_t k_;
  FwOptions opt_;
  Rng rng_;
  IBatch batch_;
  RankVector ranks_;
  std::vector<std::size_t> order_;
};

inline RankVector psctl_run(const SctForest& forest, std::size_t n, std::size_t k, std::uint32_t iterations,
                            FwOptions opt = {}) {
  Psctl solver(forest, n, k, opt);
  for (std::uint32_t t = 0; t < iterations; ++t) solver.pass();
  return solver.ranks();
}

// kCL: every pass adds one unit per clique to its minimum-rank member.
// `Source` is called with a visitor and must replay the same cliques on every
// call (e.g. a k-clique lister or enumerate_pair_cliques over a forest).
template <class Source>
class Kcl {
public:
  Kcl(Source source, std::size_t n, FwOptions opt = {}) : source_(std::move(source)), opt_(opt), rng_(opt.seed), ranks_(n) {}

  void pass() {
    source_([this](std::span<const NodeId> clique) { step(clique); });
    ++ranks_.iterations_done;
  }

  const RankVector& ranks() const noexcept { return ranks_; }

private:
  void step(std::span<const NodeId> clique) {
    NodeId best = clique[0];
    Rank low = ranks_.r[best];
    std::size_t ties = 1;
    for (std::size_t i = 1; i < clique.size(); ++i) {
      NodeId u = clique[i];
      Rank ru = ranks_.r[u];
      if (ru < low) {
        best = u;
        low = ru;
        ties = 1;
      } else if (ru == low) {
        ++ties;
        if (opt_.tie == TieMode::SmallestId) {
          best = std::min(best, u);
        } else if (std::uniform_int_distribution<std::size_t>(0, ties - 1)(rng_) == 0) {
          best = u;  // reservoir choice keeps the pick uniform among minima
        }
      }
    }
    ranks_.r[best] += 1;
  }

  Source source_;
  FwOptions opt_;
  Rng rng_;
  RankVector ranks_;
};

template <class Source>
RankVector kcl_run(Source source, std::size_t n, std::uint32_t iterations, FwOptions opt = {}) {
  Kcl<Source> solver(std::move(source), n, opt);
  for (std::uint32_t t = 0; t < iterations; ++t) solver.pass();
  return solver.ranks();
}

// Replays all k-cliques of a graph by k-clique listing.
struct ListedCliques {
  const ForwardAdjacency* fwd;
  std::size_t k;

  template <class Visit>
  void operator()(Visit&& visit) const {
    for_each_k_clique(*fwd, k, visit);
  }
};

// Replays all k-cliques encoded by a k-filtered forest.
struct ForestCliques {
  const SctForest* forest;
  std::size_t k;

  template <class Visit>
  void operator()(Visit&& visit) const {
    for (std::size_t i = 0; i < forest->eta(); ++i) {
      PairView p = forest->pair(i);
      if (p.hold.size() > k || p.size() < k) continue;
      enumerate_pair_cliques(p, k, visit);
    }
  }
};

// True iff both rank vectors lead to the same extracted node set. The
// chooser maps a RankVector to its chosen prefix.
template <class Chooser>
bool converged(const RankVector& prev, const RankVector& cur, Chooser&& choose) {
  auto a = choose(prev);
  auto b = choose(cur);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace kdense
