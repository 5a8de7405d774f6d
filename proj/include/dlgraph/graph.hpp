#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dlgraph/bitset.hpp"

namespace dlgraph {

/// Symmetric reflexive adjacency on n labelled vertices. Every vertex has a
/// loop; neighbourhoods are closed and stored as one bit vector per vertex.
class ReflexiveGraph {
 public:
  ReflexiveGraph() = default;

  explicit ReflexiveGraph(std::size_t n) : n_(n), adj_(n, Bitset(n)) {
    for (std::size_t v = 0; v < n; ++v) adj_[v].set(v);
  }

  std::size_t size() const { return n_; }

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
    adj_[u].set(v);
    adj_[v].set(u);
  }

  /// Closed neighbourhood of v.
  const Bitset& neighbours(std::size_t v) const { return adj_[v]; }

  /// Unordered non-loop edges, u < v.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (adj_[u].test(v)) out.emplace_back(u, v);
    return out;
  }

  std::size_t edge_count() const { return edges().size(); }

  /// Non-loop degree.
  std::size_t degree(std::size_t v) const { return adj_[v].count() - 1; }

  bool operator==(const ReflexiveGraph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }
  bool operator!=(const ReflexiveGraph& o) const { return !(*this == o); }

 private:
  std::size_t n_ = 0;
  std::vector<Bitset> adj_;
};

/// A linear order on the vertices, given as a permutation: order[k] is the
/// vertex in position k.
struct VertexLabeling {
  std::vector<std::size_t> order;

  static VertexLabeling identity(std::size_t n) {
    VertexLabeling l;
    l.order.resize(n);
    std::iota(l.order.begin(), l.order.end(), 0);
    return l;
  }
};

inline ReflexiveGraph build_graph(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  ReflexiveGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// Groups vertices by equal closed neighbourhood. Each class lists its
/// members in increasing order; classes appear in order of least member.
inline std::vector<std::vector<std::size_t>> r_thin_classes(const ReflexiveGraph& g) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> placed(g.size(), false);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (placed[v]) continue;
    std::vector<std::size_t> cls{v};
    placed[v] = true;
    for (std::size_t w = v + 1; w < g.size(); ++w)
      if (!placed[w] && g.neighbours(w) == g.neighbours(v)) {
        cls.push_back(w);
        placed[w] = true;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline bool is_r_thin(const ReflexiveGraph& g) {
  for (const auto& c : r_thin_classes(g))
    if (c.size() > 1) return false;
  return true;
}

struct RThinReduction {
  ReflexiveGraph quotient;
  /// vertex of G -> vertex of the quotient
  std::vector<std::size_t> cls;
  /// vertex of the quotient -> least member of its class in G
  std::vector<std::size_t> rep;
};

/// Quotient by neighbourhood equality. Classes are adjacent iff any of their
/// members are; the result is R-thin.
inline RThinReduction r_thin_reduction(const ReflexiveGraph& g) {
  auto classes = r_thin_classes(g);
  RThinReduction red;
  red.quotient = ReflexiveGraph(classes.size());
  red.cls.resize(g.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    red.rep.push_back(classes[c][0]);
    for (auto v : classes[c]) red.cls[v] = c;
  }
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t d = c + 1; d < classes.size(); ++d)
      if (g.adjacent(classes[c][0], classes[d][0]))
        red.quotient.add_edge(c, d);
  return red;
}

struct DistanceLayers {
  /// layers[j] = vertices at BFS distance j from the root
  std::vector<std::vector<std::size_t>> layers;
  std::vector<std::size_t> unreachable;
  /// dist[v], or npos when unreachable
  std::vector<std::size_t> dist;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

inline DistanceLayers distance_layers(const ReflexiveGraph& g, std::size_t root) {
  DistanceLayers out;
  out.dist.assign(g.size(), DistanceLayers::npos);
  out.dist[root] = 0;
  std::vector<std::size_t> frontier{root};
  while (!frontier.empty()) {
    out.layers.push_back(frontier);
    std::vector<std::size_t> next;
    for (auto u : frontier)
      for (std::size_t v = 0; v < g.size(); ++v)
        if (g.adjacent(u, v) && out.dist[v] == DistanceLayers::npos) {
          out.dist[v] = out.layers.size();
          next.push_back(v);
        }
    frontier = std::move(next);
  }
  for (std::size_t v = 0; v < g.size(); ++v)
    if (out.dist[v] == DistanceLayers::npos) out.unreachable.push_back(v);
  return out;
}

inline std::vector<std::vector<std::size_t>> components(const ReflexiveGraph& g) {
  std::vector<std::vector<std::size_t>> comps;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (std::size_t v = 0; v < g.size(); ++v)
        if (g.adjacent(u, v) && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const ReflexiveGraph& g) {
  return components(g).size() <= 1;
}

/// Failing quadruple of the min-max identity, positions in the labelling.
struct MinMaxWitness {
  std::size_t u_lo, u, v, v_hi;
};

/// Checks the min-max identity under the given linear order: whenever
/// u' <= u <= v <= v' and u' ~ v', also u ~ v. A graph passing this for some
/// order is a proper interval graph.
inline std::optional<MinMaxWitness> check_min_max_form(const ReflexiveGraph& g,
                                                       const VertexLabeling& l) {
  const auto& ord = l.order;
  std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t d = a; d < n; ++d) {
      if (!g.adjacent(ord[a], ord[d])) continue;
      for (std::size_t b = a; b <= d; ++b)
        for (std::size_t c = b; c <= d; ++c)
          if (!g.adjacent(ord[b], ord[c])) return MinMaxWitness{a, b, c, d};
    }
  return std::nullopt;
}

/// Induced subgraph on the given vertices; vertex k of the result is verts[k].
inline ReflexiveGraph induced_subgraph(const ReflexiveGraph& g,
                                       const std::vector<std::size_t>& verts) {
  ReflexiveGraph sub(verts.size());
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (g.adjacent(verts[a], verts[b])) sub.add_edge(a, b);
  return sub;
}

}  // namespace dlgraph
