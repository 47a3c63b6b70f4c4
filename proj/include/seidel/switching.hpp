#ifndef SEIDEL_SWITCHING_HPP
#define SEIDEL_SWITCHING_HPP

#include "errors.hpp"
#include "graph.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace seidel {

using SeidelMatrix = IntMatrix;

/// S(G) = J - I - 2A(G): 0 on the diagonal, -1 on edges, +1 on non-edges.
inline SeidelMatrix seidel_matrix(const Graph& g) {
  const int n = g.order();
  SeidelMatrix s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        s(i, j) = g.adjacent(i, j) ? -1 : 1;
  return s;
}

inline IntMatrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = g.adjacent(i, j) ? 1 : 0;
  return a;
}

/// Seidel switching with respect to U: every pair with exactly one end in U is toggled.
inline Graph switch_graph(const Graph& g, VertexSet u) {
  g.check_subset(u);
  const std::uint64_t all = VertexSet::all(g.order()).bits();
  const std::uint64_t in = u.bits();
  const std::uint64_t out = all & ~in;
  Graph h(g.order());
  for (int v = 0; v < g.order(); ++v) {
    const std::uint64_t flip = u.contains(v) ? out : in;
    const std::uint64_t row = g.row(v) ^ flip;
    for (std::uint64_t b = row & ~((std::uint64_t{2} << v) - 1); b != 0; b &= b - 1)
      h.add_edge(v, std::countr_zero(b));
  }
  return h;
}

/// S(h) == L S(g) L with L = diag(+1 on U, -1 elsewhere).
inline bool signature_conjugation_check(const Graph& g, const Graph& h, VertexSet u) {
  if (g.order() != h.order())
    throw argument_error("signature conjugation needs graphs of equal order");
  g.check_subset(u);
  const auto sg = seidel_matrix(g);
  const auto sh = seidel_matrix(h);
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    const int li = u.contains(i) ? 1 : -1;
    for (int j = 0; j < n; ++j) {
      const int lj = u.contains(j) ? 1 : -1;
      if (sh(i, j) != li * sg(i, j) * lj)
        return false;
    }
  }
  return true;
}

/// The member of g's switching class in which v is isolated: switch(g, N(v)).
inline Graph isolate_vertex_form(const Graph& g, int v) {
  g.check_vertex(v);
  return switch_graph(g, g.neighbors(v));
}

namespace detail {

/// Vertex colours from (degree, sorted neighbour degrees), numbered consistently across g and h.
inline std::pair<std::vector<int>, std::vector<int>> invariant_colours(const Graph& g, const Graph& h) {
  auto signature = [](const Graph& x, int v) {
    std::vector<int> sig{x.degree(v)};
    for (std::uint64_t b = x.row(v); b != 0; b &= b - 1)
      sig.push_back(x.degree(std::countr_zero(b)));
    std::sort(sig.begin() + 1, sig.end());
    return sig;
  };
  std::map<std::vector<int>, int> ids;
  const int n = g.order();
  std::vector<std::vector<int>> sg(static_cast<std::size_t>(n)), sh(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    sg[static_cast<std::size_t>(v)] = signature(g, v);
    sh[static_cast<std::size_t>(v)] = signature(h, v);
    ids.emplace(sg[static_cast<std::size_t>(v)], 0);
    ids.emplace(sh[static_cast<std::size_t>(v)], 0);
  }
  int next = 0;
  for (auto& [sig, id] : ids)
    id = next++;
  std::vector<int> cg(static_cast<std::size_t>(n)), ch(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    cg[static_cast<std::size_t>(v)] = ids[sg[static_cast<std::size_t>(v)]];
    ch[static_cast<std::size_t>(v)] = ids[sh[static_cast<std::size_t>(v)]];
  }
  return {cg, ch};
}

class IsomorphismSearch {
public:
  IsomorphismSearch(const Graph& g, const Graph& h, std::vector<int> cg, std::vector<int> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)), n_(g.order()),
        map_(static_cast<std::size_t>(n_), -1) {}

  std::optional<std::vector<int>> run() {
    if (extend(0))
      return map_;
    return std::nullopt;
  }

private:
  int pick_next() const {
    int best = -1;
    int best_links = -1;
    int best_class = n_ + 1;
    for (int v = 0; v < n_; ++v) {
      if ((mapped_g_ >> v) & 1U)
        continue;
      const int links = std::popcount(g_.row(v) & mapped_g_);
      const int cls = class_size(cg_[static_cast<std::size_t>(v)]);
      if (links > best_links || (links == best_links && cls < best_class)) {
        best = v;
        best_links = links;
        best_class = cls;
      }
    }
    return best;
  }

  int class_size(int colour) const {
    return static_cast<int>(std::count(cg_.begin(), cg_.end(), colour));
  }

  bool extend(int depth) {
    if (depth == n_)
      return true;
    const int v = pick_next();
    // Images of v's already-mapped neighbours must be exactly the candidate's mapped neighbours.
    std::uint64_t want = 0;
    for (std::uint64_t b = g_.row(v) & mapped_g_; b != 0; b &= b - 1)
      want |= std::uint64_t{1} << map_[static_cast<std::size_t>(std::countr_zero(b))];
    for (int c = 0; c < n_; ++c) {
      if (((used_h_ >> c) & 1U) || ch_[static_cast<std::size_t>(c)] != cg_[static_cast<std::size_t>(v)])
        continue;
      if ((h_.row(c) & used_h_) != want)
        continue;
      map_[static_cast<std::size_t>(v)] = c;
      mapped_g_ |= std::uint64_t{1} << v;
      used_h_ |= std::uint64_t{1} << c;
      if (extend(depth + 1))
        return true;
      map_[static_cast<std::size_t>(v)] = -1;
      mapped_g_ &= ~(std::uint64_t{1} << v);
      used_h_ &= ~(std::uint64_t{1} << c);
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> cg_, ch_;
  int n_;
  std::vector<int> map_;
  std::uint64_t mapped_g_ = 0;
  std::uint64_t used_h_ = 0;
};

inline std::optional<std::vector<int>> isomorphism_impl(const Graph& g, const Graph& h, int from, int to) {
  if (g.order() != h.order())
    throw argument_error("isomorphism test needs graphs of equal order");
  if (g.edge_count() != h.edge_count())
    return std::nullopt;
  auto [cg, ch] = invariant_colours(g, h);
  auto sorted_g = cg, sorted_h = ch;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h)
    return std::nullopt;
  if (from >= 0) {
    if (cg[static_cast<std::size_t>(from)] != ch[static_cast<std::size_t>(to)])
      return std::nullopt;
    const int pinned = g.order() + 1; // colour used by no other vertex
    cg[static_cast<std::size_t>(from)] = pinned;
    ch[static_cast<std::size_t>(to)] = pinned;
  }
  return IsomorphismSearch(g, h, std::move(cg), std::move(ch)).run();
}

} // namespace detail

/// Permutation p with relabel(g, p) == h, if one exists.
inline std::optional<std::vector<int>> graph_isomorphism(const Graph& g, const Graph& h) {
  return detail::isomorphism_impl(g, h, -1, -1);
}

/// As graph_isomorphism, restricted to maps sending `from` to `to`.
inline std::optional<std::vector<int>> graph_isomorphism(const Graph& g, const Graph& h, int from, int to) {
  g.check_vertex(from);
  h.check_vertex(to);
  return detail::isomorphism_impl(g, h, from, to);
}

inline std::vector<int> inverse_permutation(std::span<const int> perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  return inv;
}

/// relabel(switch_graph(g, subset), perm) == h.
struct SwitchingCertificate {
  VertexSet subset;
  std::vector<int> perm;
};

inline bool verify_certificate(const Graph& g, const Graph& h, const SwitchingCertificate& cert) {
  if (g.order() != h.order() || static_cast<int>(cert.perm.size()) != g.order())
    return false;
  if ((cert.subset.bits() & ~VertexSet::all(g.order()).bits()) != 0)
    return false;
  std::uint64_t seen = 0;
  for (int x : cert.perm) {
    if (x < 0 || x >= g.order() || ((seen >> x) & 1U))
      return false;
    seen |= std::uint64_t{1} << x;
  }
  const Graph pulled_back = relabel(h, inverse_permutation(cert.perm));
  return signature_conjugation_check(g, pulled_back, cert.subset) &&
         relabel(switch_graph(g, cert.subset), cert.perm) == h;
}

/// Decides whether h is isomorphic to a switching of g. Fixes vertex 0 of g and tries every w
/// of h: both sides are normalized by isolating the chosen vertex, then tested for an
/// isomorphism sending 0 to w. The lowest successful w determines the certificate.
inline std::optional<SwitchingCertificate> switching_equivalent(const Graph& g, const Graph& h) {
  if (g.order() != h.order())
    throw argument_error("switching equivalence needs graphs of equal order");
  const int n = g.order();
  if (n == 0)
    return SwitchingCertificate{};
  const Graph g0 = isolate_vertex_form(g, 0);
  for (int w = 0; w < n; ++w) {
    const Graph hw = isolate_vertex_form(h, w);
    auto perm = graph_isomorphism(g0, hw, 0, w);
    if (!perm)
      continue;
    // h = switch(hw, N_h(w)) = perm(switch(g, N_g(0) ^ perm^-1(N_h(w)))).
    const auto inv = inverse_permutation(*perm);
    VertexSet pulled;
    for (int x : h.neighbors(w).indices())
      pulled.insert(inv[static_cast<std::size_t>(x)]);
    return SwitchingCertificate{g.neighbors(0) ^ pulled, std::move(*perm)};
  }
  return std::nullopt;
}

} // namespace seidel

#endif
