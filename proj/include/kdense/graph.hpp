#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iterator>
#include <istream>
#include <ostream>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kdense/error.hpp"

namespace kdense {

using NodeId = std::uint32_t;
using Label = std::uint64_t;

// Simple undirected graph in compressed adjacency form. Node ids are dense
// (0..n-1); labels() maps them back to the labels seen in the input.
class Graph {
public:
  Graph() = default;

  // Builds from dense-id edges. Self-loops are dropped and duplicate or
  // reversed edges merged. An empty `labels` means label(u) == u.
  static Graph from_edges(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges,
                          std::vector<Label> labels = {}) {
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n) throw Error("edge endpoint out of range");
      if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : edges) {
      ++g.offsets_[u + 1];
      ++g.offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.adj_.resize(g.offsets_[n]);
    std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
      g.adj_[fill[u]++] = v;
      g.adj_[fill[v]++] = u;
    }
    for (std::size_t u = 0; u < n; ++u)
      std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]),
                g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]));
    g.m_ = edges.size();
    if (labels.empty()) {
      labels.resize(n);
      for (std::size_t i = 0; i < n; ++i) labels[i] = i;
    } else if (labels.size() != n) {
      throw Error("label map size does not match node count");
    }
    g.labels_ = std::move(labels);
    return g;
  }

  std::size_t n() const noexcept { return labels_.size(); }
  std::size_t m() const noexcept { return m_; }

  std::span<const NodeId> neighbors(NodeId u) const noexcept {
    return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const noexcept { return offsets_[u + 1] - offsets_[u]; }

  bool has_edge(NodeId u, NodeId v) const noexcept {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  Label label(NodeId u) const noexcept { return labels_[u]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  // Edges as (u, v) with u < v, in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(m_);
    for (NodeId u = 0; u < n(); ++u)
      for (NodeId v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<std::uint64_t> offsets_{0};
  std::vector<NodeId> adj_;
  std::vector<Label> labels_;
  std::size_t m_ = 0;
};

namespace detail {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

inline std::string_view next_token(std::string_view& line) {
  std::size_t i = 0;
  while (i < line.size() && is_space(line[i])) ++i;
  std::size_t j = i;
  while (j < line.size() && !is_space(line[j])) ++j;
  auto tok = line.substr(i, j - i);
  line.remove_prefix(j);
  return tok;
}

inline Label parse_label(std::string_view tok, std::size_t line_no) {
  Label value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() ||
      value > static_cast<Label>(INT64_MAX))
    throw ParseError(line_no, "malformed node label '" + std::string(tok) + "'");
  return value;
}

}  // namespace detail

// Reads a whitespace-separated edge list. Lines starting with '#' or '%' and
// blank lines are skipped; tokens after the first two are ignored. Labels are
// remapped to dense ids in first-appearance order.
inline Graph load_edge_list(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::unordered_map<Label, NodeId> ids;
  std::vector<Label> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;

  auto intern = [&](Label l) {
    auto [it, inserted] = ids.try_emplace(l, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(l);
    return it->second;
  };

  std::string_view rest(text);
  std::size_t line_no = 0;
  while (!rest.empty()) {
    ++line_no;
    auto eol = rest.find('\n');
    std::string_view line = rest.substr(0, eol);
    rest.remove_prefix(eol == std::string_view::npos ? rest.size() : eol + 1);

    std::string_view cursor = line;
    auto first = detail::next_token(cursor);
    if (first.empty() || first.front() == '#' || first.front() == '%') continue;
    auto second = detail::next_token(cursor);
    if (second.empty()) throw ParseError(line_no, "expected two node labels");
    Label a = detail::parse_label(first, line_no);
    Label b = detail::parse_label(second, line_no);
    NodeId u = intern(a);
    NodeId v = intern(b);
    edges.emplace_back(u, v);
  }
  const std::size_t n = labels.size();
  Graph g = Graph::from_edges(n, std::move(edges), std::move(labels));
  if (g.m() == 0) throw ParseError("no edges");
  return g;
}

inline Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_edge_list(in);
}

// Writes one "label label" line per edge. Lines are ordered so that labels
// first appear in dense-id order whenever that is possible (always for graphs
// that came from load_edge_list), making write + reload an identity.
// Otherwise edges are written sorted by dense id.
inline void write_edge_list(const Graph& g, std::ostream& out) {
  const std::size_t n = g.n();
  std::vector<std::pair<NodeId, NodeId>> lead;  // in output orientation
  std::vector<char> seen(n, 0);
  bool ordered = true;
  for (NodeId b = 0; b < n && ordered; ++b) {
    if (seen[b]) continue;
    auto nb = g.neighbors(b);
    if (!nb.empty() && nb.front() < b) {
      lead.emplace_back(b, nb.front());
    } else if (b + 1 < n && g.has_edge(b, b + 1)) {
      lead.emplace_back(b, b + 1);
      seen[b + 1] = 1;
    } else if (!nb.empty()) {
      ordered = false;
    }
    seen[b] = 1;
  }
  auto line = [&](NodeId a, NodeId b) { out << g.label(a) << ' ' << g.label(b) << '\n'; };
  if (!ordered) {
    for (auto [u, v] : g.edges()) line(u, v);
    return;
  }
  std::vector<std::pair<NodeId, NodeId>> used;
  for (auto [a, b] : lead) {
    line(a, b);
    used.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(used.begin(), used.end());
  for (auto e : g.edges())
    if (!std::binary_search(used.begin(), used.end(), e)) line(e.first, e.second);
}

struct DegeneracyOrder {
  std::vector<NodeId> order;        // removal order
  std::vector<std::uint32_t> position;  // inverse of `order`
  std::uint32_t delta = 0;

  bool later(NodeId a, NodeId b) const noexcept { return position[a] > position[b]; }
};

// Min-degree peeling. Among nodes of minimum current degree the smallest id
// is removed first; delta is the largest degree seen at removal time.
inline DegeneracyOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.n();
  DegeneracyOrder d;
  d.order.reserve(n);
  d.position.assign(n, 0);

  std::vector<std::uint32_t> deg(n);
  std::size_t max_deg = 0;
  for (NodeId u = 0; u < n; ++u) {
    deg[u] = static_cast<std::uint32_t>(g.degree(u));
    max_deg = std::max<std::size_t>(max_deg, deg[u]);
  }
  // One min-heap per degree with lazy deletion of stale entries.
  using MinHeap = std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>>;
  std::vector<MinHeap> buckets(max_deg + 1);
  for (NodeId u = 0; u < n; ++u) buckets[deg[u]].push(u);
  std::vector<char> removed(n, 0);

  std::size_t cur = 0;
  while (d.order.size() < n) {
    while (cur < buckets.size() && buckets[cur].empty()) ++cur;
    NodeId u = buckets[cur].top();
    buckets[cur].pop();
    if (removed[u] || deg[u] != cur) continue;
    removed[u] = 1;
    d.position[u] = static_cast<std::uint32_t>(d.order.size());
    d.order.push_back(u);
    d.delta = std::max<std::uint32_t>(d.delta, deg[u]);
    for (NodeId v : g.neighbors(u)) {
      if (removed[v]) continue;
      --deg[v];
      buckets[deg[v]].push(v);
    }
    if (cur > 0) --cur;
  }
  return d;
}

struct Coloring {
  std::vector<std::uint32_t> color;
  std::uint32_t num_colors = 0;
};

// Greedy coloring in reverse degeneracy order: each node takes the smallest
// color not used by an already-colored neighbor, so num_colors <= delta + 1.
inline Coloring greedy_color(const Graph& g, const DegeneracyOrder& ord) {
  constexpr std::uint32_t kNone = UINT32_MAX;
  Coloring c;
  c.color.assign(g.n(), kNone);
  std::vector<std::size_t> stamp(ord.delta + 2, SIZE_MAX);
  for (std::size_t i = g.n(); i-- > 0;) {
    NodeId u = ord.order[i];
    for (NodeId v : g.neighbors(u))
      if (c.color[v] != kNone && c.color[v] < stamp.size()) stamp[c.color[v]] = i;
    std::uint32_t col = 0;
    while (stamp[col] == i) ++col;
    c.color[u] = col;
    c.num_colors = std::max(c.num_colors, col + 1);
  }
  return c;
}

}  // namespace kdense
