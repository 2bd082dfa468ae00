#pragma once

// Shared clique machinery: forward (degeneracy-oriented) adjacency, small
// bitset subgraphs, the pivot recursion behind the succinct clique tree, and
// plain k-clique listing.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "kdense/combinatorics.hpp"
#include "kdense/graph.hpp"

namespace kdense {

// Out-lists of the DAG that orients every edge from the earlier to the later
// node of a degeneracy order. Each out-list has at most delta entries and is
// sorted by dense id.
class ForwardAdjacency {
public:
  ForwardAdjacency(const Graph& g, const DegeneracyOrder& ord) {
    offsets_.assign(g.n() + 1, 0);
    for (NodeId u = 0; u < g.n(); ++u)
      for (NodeId v : g.neighbors(u))
        if (ord.later(v, u)) ++offsets_[u + 1];
    for (std::size_t i = 0; i < g.n(); ++i) offsets_[i + 1] += offsets_[i];
    out_.resize(offsets_.back());
    for (NodeId u = 0; u < g.n(); ++u) {
      std::size_t at = offsets_[u];
      for (NodeId v : g.neighbors(u))
        if (ord.later(v, u)) out_[at++] = v;
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

namespace detail {

using Word = std::uint64_t;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline bool test_bit(const Word* w, std::size_t i) { return (w[i >> 6] >> (i & 63)) & 1U; }
inline void set_bit(Word* w, std::size_t i) { w[i >> 6] |= Word{1} << (i & 63); }
inline void clear_bit(Word* w, std::size_t i) { w[i >> 6] &= ~(Word{1} << (i & 63)); }

inline std::size_t popcount(const Word* w, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(std::popcount(w[i]));
  return c;
}

inline std::size_t popcount_and(const Word* a, const Word* b, std::size_t words) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

template <class F>
void for_each_bit(const Word* w, std::size_t words, F&& f) {
  for (std::size_t i = 0; i < words; ++i) {
    Word x = w[i];
    while (x) {
      auto b = static_cast<std::size_t>(std::countr_zero(x));
      f(i * 64 + b);
      x &= x - 1;
    }
  }
}

// Induced subgraph on a vertex list, stored as one adjacency bitset per
// local vertex. Local index order follows the order of `vertices`.
class LocalGraph {
public:
  explicit LocalGraph(std::size_t n) : local_of_(n, kNone) {}

  void build(const ForwardAdjacency& fwd, std::span<const NodeId> vertices) {
    vertices_.assign(vertices.begin(), vertices.end());
    words_ = words_for(vertices_.size());
    rows_.assign(vertices_.size() * words_, 0);
    for (std::size_t i = 0; i < vertices_.size(); ++i) local_of_[vertices_[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      for (NodeId x : fwd.out(vertices_[i])) {
        std::uint32_t j = local_of_[x];
        if (j == kNone) continue;
        set_bit(row_mut(i), j);
        set_bit(row_mut(j), i);
      }
    }
    for (NodeId v : vertices_) local_of_[v] = kNone;
  }

  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t words() const noexcept { return words_; }
  const Word* row(std::size_t i) const noexcept { return rows_.data() + i * words_; }
  NodeId global(std::size_t i) const noexcept { return vertices_[i]; }

private:
  static constexpr std::uint32_t kNone = UINT32_MAX;
  Word* row_mut(std::size_t i) noexcept { return rows_.data() + i * words_; }

  std::vector<std::uint32_t> local_of_;
  std::vector<NodeId> vertices_;
  std::vector<Word> rows_;
  std::size_t words_ = 0;
};

// Pivot recursion over a LocalGraph. At every leaf (empty candidate set) the
// visitor receives the hold and pivot stacks as local indices; the cliques
// {hold + any subset of pivots} over all leaves partition the cliques of the
// local graph (including the empty clique at the all-pivot leaf).
//
// With prune_k > 0, subtrees that cannot contain a clique of exactly prune_k
// nodes are skipped; `base_hold` counts hold nodes kept outside the local
// graph (the root of an SCT subtree).
class PivotRecursion {
public:
  template <class Leaf>
  void run(const LocalGraph& lg, std::size_t prune_k, std::size_t base_hold, Leaf&& leaf) {
    lg_ = &lg;
    prune_k_ = prune_k;
    base_hold_ = base_hold;
    words_ = lg.words();
    const std::size_t levels = lg.size() + 2;
    cand_.assign(levels * words_, 0);
    excl_.assign(levels * words_, 0);
    hold_.clear();
    pivots_.clear();
    for (std::size_t i = 0; i < lg.size(); ++i) set_bit(cand_.data(), i);
    recurse(0, leaf);
  }

private:
  template <class Leaf>
  void recurse(std::size_t depth, Leaf& leaf) {
    Word* c = cand_.data() + depth * words_;
    const std::size_t csize = popcount(c, words_);
    if (prune_k_ > 0) {
      const std::size_t h = base_hold_ + hold_.size();
      if (h > prune_k_ || h + pivots_.size() + csize < prune_k_) return;
    }
    if (csize == 0) {
      leaf(std::span<const std::uint32_t>(hold_), std::span<const std::uint32_t>(pivots_));
      return;
    }
    // Pivot: most neighbors inside C, smallest local index on ties.
    std::size_t pivot = 0, best = 0;
    bool first = true;
    for_each_bit(c, words_, [&](std::size_t p) {
      std::size_t d = popcount_and(lg_->row(p), c, words_);
      if (first || d > best) {
        pivot = p;
        best = d;
        first = false;
      }
    });
    Word* next = cand_.data() + (depth + 1) * words_;
    const Word* prow = lg_->row(pivot);

    for (std::size_t i = 0; i < words_; ++i) next[i] = c[i] & prow[i];
    pivots_.push_back(static_cast<std::uint32_t>(pivot));
    recurse(depth + 1, leaf);
    pivots_.pop_back();

    Word* excl = excl_.data() + depth * words_;
    std::fill(excl, excl + words_, 0);
    // Branch on every non-neighbor q of the pivot, excluding earlier branches.
    for (std::size_t wi = 0; wi < words_; ++wi) {
      Word todo = c[wi] & ~prow[wi];
      while (todo) {
        std::size_t q = wi * 64 + static_cast<std::size_t>(std::countr_zero(todo));
        todo &= todo - 1;
        if (q == pivot) continue;
        const Word* qrow = lg_->row(q);
        for (std::size_t i = 0; i < words_; ++i) next[i] = c[i] & qrow[i] & ~excl[i];
        hold_.push_back(static_cast<std::uint32_t>(q));
        recurse(depth + 1, leaf);
        hold_.pop_back();
        set_bit(excl, q);
      }
    }
  }

  const LocalGraph* lg_ = nullptr;
  std::size_t prune_k_ = 0;
  std::size_t base_hold_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> cand_;
  std::vector<Word> excl_;
  std::vector<std::uint32_t> hold_;
  std::vector<std::uint32_t> pivots_;
};

}  // namespace detail

// Counts the k-cliques of the subgraph induced by `vertices` (k >= 1).
class SubsetCliqueCounter {
public:
  SubsetCliqueCounter(const Graph& g, const ForwardAdjacency& fwd) : fwd_(&fwd), local_(g.n()) {}

  std::uint64_t count(std::span<const NodeId> vertices, std::size_t k) {
    if (k == 0) return 1;
    if (vertices.size() < k) return 0;
    if (k == 1) return vertices.size();
    local_.build(*fwd_, vertices);
    std::uint64_t total = 0;
    rec_.run(local_, k, 0, [&](std::span<const std::uint32_t> hold, std::span<const std::uint32_t> piv) {
      total = checked_add(total, binomial(static_cast<std::int64_t>(piv.size()),
                                          static_cast<std::int64_t>(k - hold.size())));
    });
    return total;
  }

private:
  const ForwardAdjacency* fwd_;
  detail::LocalGraph local_;
  detail::PivotRecursion rec_;
};

// |C_k(V)| by pivot counting over each node's forward neighborhood.
inline std::uint64_t count_k_cliques(const Graph& g, const DegeneracyOrder& ord, std::size_t k) {
  if (k == 0) return 1;
  if (k == 1) return g.n();
  ForwardAdjacency fwd(g, ord);
  SubsetCliqueCounter counter(g, fwd);
  std::uint64_t total = 0;
  for (NodeId v = 0; v < g.n(); ++v) total = checked_add(total, counter.count(fwd.out(v), k - 1));
  return total;
}

// Lists every k-clique once (k >= 2) by recursive intersection of forward
// neighborhoods. The visitor receives the clique's nodes in
// degeneracy order.
template <class Visit>
void for_each_k_clique(const ForwardAdjacency& fwd, std::size_t k, Visit&& visit) {
  if (k < 2) return;
  std::vector<NodeId> clique(k);
  std::vector<std::vector<NodeId>> levels(k);
  auto intersect = [&](std::span<const NodeId> a, std::span<const NodeId> b, std::vector<NodeId>& out) {
    out.clear();
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  };
  auto rec = [&](auto& self, std::size_t depth) -> void {
    const auto& cand = levels[depth];
    if (depth + 1 == k) {
      for (NodeId u : cand) {
        clique[depth] = u;
        visit(std::span<const NodeId>(clique));
      }
      return;
    }
    for (NodeId u : cand) {
      clique[depth] = u;
      intersect(cand, fwd.out(u), levels[depth + 1]);
      if (levels[depth + 1].size() + depth + 2 >= k) self(self, depth + 1);
    }
  };
  for (NodeId v = 0; v < fwd.n(); ++v) {
    auto out = fwd.out(v);
    if (out.size() + 1 < k) continue;
    clique[0] = v;
    levels[1].assign(out.begin(), out.end());
    rec(rec, 1);
  }
}

}  // namespace kdense
