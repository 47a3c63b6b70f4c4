#ifndef SEIDEL_GRAPH_HPP
#define SEIDEL_GRAPH_HPP

#include "errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seidel {

inline constexpr int max_order = 64;

/// A set of vertices in {0..63}, stored as one machine word.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs)
      insert(v);
  }

  static VertexSet from_indices(std::span<const int> vs) {
    VertexSet s;
    for (int v : vs)
      s.insert(v);
    return s;
  }

  /// {0, .., n-1}
  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  void insert(int v) {
    if (v < 0 || v >= max_order)
      throw argument_error("vertex " + std::to_string(v) + " out of range");
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
  std::uint64_t bits_ = 0;
};

/// Simple undirected graph on vertices 0..n-1 with n <= 64; one adjacency word per vertex.
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n) {
    if (n < 0)
      throw argument_error("negative vertex count");
    if (n > max_order)
      throw capacity_error("graph order " + std::to_string(n) + " exceeds " + std::to_string(max_order));
  }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges)
      g.add_edge(u, v);
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }

  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v)
      twice += static_cast<std::size_t>(degree(v));
    return twice / 2;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
  void remove_edge(int u, int v) {
    check_pair(u, v);
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }
  void toggle_edge(int u, int v) {
    check_pair(u, v);
    rows_[u] ^= std::uint64_t{1} << v;
    rows_[v] ^= std::uint64_t{1} << u;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw argument_error("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
  void check_subset(VertexSet s) const {
    if ((s.bits() & ~VertexSet::all(n_).bits()) != 0)
      throw argument_error("vertex set contains vertices outside 0.." + std::to_string(n_ - 1));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
  }

private:
  void check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw argument_error("self-loop on vertex " + std::to_string(u));
  }

  int n_ = 0;
  std::array<std::uint64_t, max_order> rows_{};
};

/// Relabel: vertex v of g becomes perm[v] in the result.
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw argument_error("permutation length does not match graph order");
  std::uint64_t seen = 0;
  for (int x : perm) {
    if (x < 0 || x >= n || ((seen >> x) & 1U))
      throw argument_error("not a permutation of 0..n-1");
    seen |= std::uint64_t{1} << x;
  }
  Graph out(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v))
        out.add_edge(perm[u], perm[v]);
  return out;
}

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v)
    g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3)
    throw argument_error("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

/// Triangle 0-1-2 with pendant vertex 3 attached to 2.
inline Graph paw_graph() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }

/// Part sizes of a complete multipartite graph, kept sorted non-increasing.
class MultipartiteSpec {
public:
  MultipartiteSpec() = default;

  explicit MultipartiteSpec(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
      throw argument_error("multipartite spec needs at least one part");
    for (int p : parts_)
      if (p < 1)
        throw argument_error("part sizes must be positive, got " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }
  MultipartiteSpec(std::initializer_list<int> parts) : MultipartiteSpec(std::vector<int>(parts)) {}

  /// Parses "6,6,1".
  static MultipartiteSpec parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
      int value = 0;
      const char* first = text.data() + pos;
      const char* last = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr == first)
        throw parse_error("expected a part size", pos);
      if (value < 1)
        throw parse_error("part sizes must be positive", pos);
      parts.push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
      if (pos == text.size())
        break;
      if (text[pos] != ',')
        throw parse_error("expected ','", pos);
      ++pos;
    }
    return MultipartiteSpec(std::move(parts));
  }

  std::span<const int> parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int order() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i)
        s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const MultipartiteSpec&, const MultipartiteSpec&) = default;
  friend auto operator<=>(const MultipartiteSpec&, const MultipartiteSpec&) = default;

private:
  std::vector<int> parts_;
};

/// K_{p1,...,pk}; parts occupy contiguous index blocks, largest first.
inline Graph complete_multipartite(const MultipartiteSpec& spec) {
  const int n = spec.order();
  if (n > max_order)
    throw capacity_error("complete multipartite graph of order " + std::to_string(n) + " exceeds " +
                         std::to_string(max_order));
  Graph g(n);
  std::vector<int> block(static_cast<std::size_t>(n));
  int v = 0;
  for (int i = 0; i < spec.num_parts(); ++i)
    for (int j = 0; j < spec.parts()[static_cast<std::size_t>(i)]; ++j)
      block[static_cast<std::size_t>(v++)] = i;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (block[static_cast<std::size_t>(a)] != block[static_cast<std::size_t>(b)])
        g.add_edge(a, b);
  return g;
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > max_order)
    throw capacity_error("disjoint union of order " + std::to_string(n) + " exceeds " + std::to_string(max_order));
  Graph out(n);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v))
        out.add_edge(u, v);
  const int shift = g.order();
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (h.adjacent(u, v))
        out.add_edge(u + shift, v + shift);
  return out;
}

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v))
        out.add_edge(u, v);
  return out;
}

/// Subgraph induced on `vs`, relabelled densely in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, VertexSet vs) {
  if (vs.empty())
    throw argument_error("induced subgraph needs a nonempty vertex set");
  g.check_subset(vs);
  const auto idx = vs.indices();
  Graph out(static_cast<int>(idx.size()));
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (g.adjacent(idx[a], idx[b]))
        out.add_edge(static_cast<int>(a), static_cast<int>(b));
  return out;
}

inline VertexSet isolated_vertices(const Graph& g) {
  VertexSet s;
  for (int v = 0; v < g.order(); ++v)
    if (g.row(v) == 0)
      s.insert(v);
  return s;
}

/// Part sizes if g is complete multipartite, i.e. non-adjacency is an equivalence relation.
/// The edgeless graph on n vertices is reported as the one-part spec (n).
inline std::optional<MultipartiteSpec> recognize_complete_multipartite(const Graph& g) {
  const int n = g.order();
  if (n == 0)
    return std::nullopt;
  const std::uint64_t everyone = VertexSet::all(n).bits();
  std::uint64_t assigned = 0;
  std::vector<int> parts;
  for (int v = 0; v < n; ++v) {
    if ((assigned >> v) & 1U)
      continue;
    const std::uint64_t cls = everyone & ~g.row(v);
    for (std::uint64_t b = cls; b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      if ((everyone & ~g.row(u)) != cls)
        return std::nullopt;
    }
    assigned |= cls;
    parts.push_back(std::popcount(cls));
  }
  return MultipartiteSpec(std::move(parts));
}

/// Number of vertex pairs, i.e. potential edges, on n vertices.
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Graph whose edges are the set bits of `mask`, pairs ordered column-major over the
/// upper triangle: (0,1), (0,2), (1,2), (0,3), ... (the graph6 bit order).
inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1U)
        g.add_edge(i, j);
  return g;
}

inline constexpr int default_enumeration_cap = 7;
inline constexpr int hard_enumeration_cap = 11; // 55 pairs still fit one 64-bit mask

/// Number of labeled graphs on n vertices; checks the enumeration cap.
inline std::uint64_t labeled_graph_count(int n, bool allow_large = false) {
  if (n < 1)
    throw argument_error("enumeration needs n >= 1");
  const int cap = allow_large ? hard_enumeration_cap : default_enumeration_cap;
  if (n > cap)
    throw capacity_error("enumerating graphs on " + std::to_string(n) + " vertices exceeds cap " +
                         std::to_string(cap));
  return std::uint64_t{1} << pair_count(n);
}

/// Every labeled graph on n vertices exactly once, in increasing edge-mask order.
/// `[first, last)` restricts to a mask interval so workers can split the stream.
template <class Fn>
void for_each_graph(int n, Fn&& fn, std::uint64_t first = 0, std::uint64_t last = ~std::uint64_t{0},
                    bool allow_large = false) {
  const std::uint64_t total = labeled_graph_count(n, allow_large);
  last = std::min(last, total);
  for (std::uint64_t mask = first; mask < last; ++mask)
    fn(graph_from_edge_mask(n, mask), mask);
}

/// Materialized enumeration; intended for small n.
inline std::vector<Graph> enumerate_graphs(int n, bool allow_large = false) {
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(labeled_graph_count(n, allow_large)));
  for_each_graph(n, [&](const Graph& g, std::uint64_t) { out.push_back(g); }, 0, ~std::uint64_t{0}, allow_large);
  return out;
}

/// All partitions of n into positive parts, each non-increasing; reverse lexicographic order.
inline std::vector<MultipartiteSpec> partitions_of(int n) {
  std::vector<MultipartiteSpec> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n >= 1)
    rec(n, n);
  return out;
}

/// Partitions of n into exactly k parts.
inline std::vector<MultipartiteSpec> partitions_of(int n, int k) {
  std::vector<MultipartiteSpec> out;
  for (auto& s : partitions_of(n))
    if (s.num_parts() == k)
      out.push_back(std::move(s));
  return out;
}

} // namespace seidel

#endif
