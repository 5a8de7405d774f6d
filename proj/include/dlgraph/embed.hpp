#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dlgraph/gpa.hpp"
#include "dlgraph/graph.hpp"
#include "dlgraph/lattice.hpp"
#include "dlgraph/poset.hpp"

namespace dlgraph {

/// Product of chains P_i = 0 < 1 < ... < n_i. Vertices are tuples under the
/// componentwise order; meet and join are componentwise min and max.
struct ChainProduct {
  /// top value n_i of each chain; the chain has n_i + 1 values
  std::vector<std::size_t> sizes;

  std::size_t dimensions() const { return sizes.size(); }

  std::size_t vertex_count() const {
    std::size_t c = 1;
    for (auto s : sizes) c *= s + 1;
    return c;
  }

  /// All tuples, in odometer order with the last coordinate fastest.
  std::vector<std::vector<std::size_t>> vertices() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> x(sizes.size(), 0);
    for (;;) {
      out.push_back(x);
      std::size_t k = sizes.size();
      while (k-- > 0) {
        if (x[k] < sizes[k]) {
          ++x[k];
          break;
        }
        x[k] = 0;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
    return out;
  }
};

/// Product vertices x with x_i >= alpha and x_j <= beta.
struct VertexInterval {
  std::size_t alpha, i, beta, j;

  bool contains(const std::vector<std::size_t>& x) const {
    return x[i] >= alpha && x[j] <= beta;
  }
  bool empty_in(const ChainProduct&) const { return i == j && alpha > beta; }
  bool operator==(const VertexInterval& o) const {
    return alpha == o.alpha && i == o.i && beta == o.beta && j == o.j;
  }
};

/// Unordered pairs {x, y} with x_i >= alpha and y_j <= beta.
struct EdgeBlock {
  std::size_t alpha, i, beta, j;

  bool contains(const std::vector<std::size_t>& x,
                const std::vector<std::size_t>& y) const {
    return (x[i] >= alpha && y[j] <= beta) || (y[i] >= alpha && x[j] <= beta);
  }
  bool operator==(const EdgeBlock& o) const {
    return alpha == o.alpha && i == o.i && beta == o.beta && j == o.j;
  }
};

/// The coordinate map e_C(D) = (|D n C_1|, ..., |D n C_d|), indexed like the
/// canonical downset list. A lattice embedding of D(P) into the product.
inline std::vector<std::vector<std::size_t>> embed_coordinates(
    const Poset& p, const ChainCover& cover) {
  if (!valid_chain_cover(p, cover))
    throw std::invalid_argument("invalid chain cover");
  auto downsets = enumerate_downsets(p);
  std::vector<std::vector<std::size_t>> coords;
  coords.reserve(downsets.size());
  for (const auto& d : downsets) {
    std::vector<std::size_t> x;
    for (const auto& chain : cover.chains) {
      std::size_t c = 0;
      for (auto e : chain)
        if (d.test(e)) ++c;
      x.push_back(c);
    }
    coords.push_back(std::move(x));
  }
  return coords;
}

inline ChainProduct chain_product_of(const ChainCover& cover) {
  ChainProduct prod;
  for (const auto& chain : cover.chains) prod.sizes.push_back(chain.size());
  return prod;
}

/// One proper interval graph per chain: G_i = G(C_i, A restricted to C_i),
/// on the chain 0..n_i of downsets of C_i.
inline std::vector<ReflexiveGraph> factor_graphs(const Poset& p, const ArcSet& a,
                                                 const ChainCover& cover) {
  std::vector<ReflexiveGraph> factors;
  for (const auto& chain : cover.chains) {
    Poset cp(chain.size());
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) cp.add_leq(k, k + 1);
    ArcSet ca(chain.size());
    for (std::size_t k = 0; k < chain.size(); ++k)
      for (std::size_t m = k; m < chain.size(); ++m)
        if (a.has(chain[k], chain[m])) ca.add(k, m);
    factors.push_back(construct_gpa(cp, ca));
  }
  return factors;
}

/// Adjacency in the product of the factor graphs.
inline bool product_adjacent(const std::vector<ReflexiveGraph>& factors,
                             const std::vector<std::size_t>& x,
                             const std::vector<std::size_t>& y) {
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (!factors[i].adjacent(x[i], y[i])) return false;
  return true;
}

struct RemovedRegions {
  std::vector<VertexInterval> vertex_intervals;
  std::vector<EdgeBlock> edge_blocks;
};

/// Vertex intervals for every label comparability c^{beta+1}_j <= c^alpha_i
/// of P, and edge blocks for every arc c^{beta+1}_j -> c^alpha_i of the
/// reduced complement of A. With omit_empty, same-chain intervals that hold
/// no product vertex are dropped.
inline RemovedRegions removed_regions(const Poset& p, const ArcSet& a,
                                      const ChainCover& cover,
                                      bool omit_empty = true) {
  RemovedRegions out;
  ChainProduct prod = chain_product_of(cover);
  const auto& chains = cover.chains;
  auto push_interval = [&](VertexInterval v) {
    if (omit_empty && v.empty_in(prod)) return;
    if (std::find(out.vertex_intervals.begin(), out.vertex_intervals.end(), v) ==
        out.vertex_intervals.end())
      out.vertex_intervals.push_back(v);
  };
  auto push_block = [&](EdgeBlock e) {
    if (std::find(out.edge_blocks.begin(), out.edge_blocks.end(), e) ==
        out.edge_blocks.end())
      out.edge_blocks.push_back(e);
  };
  ArcSet red = reduced_complement(p, a);
  for (std::size_t i = 0; i < chains.size(); ++i)
    for (std::size_t alpha = 1; alpha <= chains[i].size(); ++alpha)
      for (std::size_t j = 0; j < chains.size(); ++j)
        for (std::size_t beta = 0; beta + 1 <= chains[j].size(); ++beta) {
          std::size_t lo = chains[j][beta];          // c^{beta+1}_j
          std::size_t hi = chains[i][alpha - 1];     // c^alpha_i
          if (p.leq(lo, hi)) push_interval({alpha, i, beta, j});
          if (red.has(lo, hi)) push_block({alpha, i, beta, j});
        }
  return out;
}

/// Corollary condition for an induced embedding: every non-loop arc of the
/// reduced complement lies inside a single chain of the cover.
inline bool is_induced_embedding(const ChainCover& cover, const ArcSet& red) {
  for (auto [x, y] : red.non_loop_arcs()) {
    bool inside = false;
    for (const auto& chain : cover.chains) {
      bool has_x = std::find(chain.begin(), chain.end(), x) != chain.end();
      bool has_y = std::find(chain.begin(), chain.end(), y) != chain.end();
      if (has_x && has_y) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

/// Cover making the embedding induced: one 2-chain per non-loop arc of the
/// reduced complement, singletons elsewhere.
inline ChainCover induced_cover(const Poset& p, const ArcSet& red) {
  return chain_cover_from_digraph(p, red.non_loop_arcs());
}

struct Tightness {
  bool tight = false;
  /// lattice covers whose coordinates jump by more than one unit step
  std::size_t nontight_cover_count = 0;
};

inline Tightness tightness(const Poset& p, const Lattice& l,
                           const ChainCover& cover) {
  Tightness out;
  out.tight = cover.disjoint();
  auto coords = embed_coordinates(p, cover);
  for (auto [x, y] : l.order.covers()) {
    std::size_t steps = 0;
    for (std::size_t i = 0; i < coords[x].size(); ++i)
      steps += coords[y][i] - coords[x][i];
    if (steps > 1) ++out.nontight_cover_count;
  }
  return out;
}

struct EmbeddingResult {
  ChainCover cover;
  ChainProduct product;
  /// downset index -> coordinate tuple
  std::vector<std::vector<std::size_t>> coords;
  std::vector<ReflexiveGraph> factors;
  std::vector<VertexInterval> removed_vertices;
  std::vector<EdgeBlock> removed_edges;
  bool tight = false;
  bool induced = false;
  std::size_t nontight_cover_count = 0;
};

inline EmbeddingResult build_embedding(const Poset& p, const ArcSet& a,
                                       const ChainCover& cover,
                                       bool omit_empty = true) {
  ArcSet norm = normalize_arcs(p, a);
  EmbeddingResult emb;
  emb.cover = cover;
  emb.product = chain_product_of(cover);
  emb.coords = embed_coordinates(p, cover);
  emb.factors = factor_graphs(p, norm, cover);
  auto regions = removed_regions(p, norm, cover, omit_empty);
  emb.removed_vertices = std::move(regions.vertex_intervals);
  emb.removed_edges = std::move(regions.edge_blocks);
  emb.induced = is_induced_embedding(cover, reduced_complement(p, norm));
  auto t = tightness(p, downset_lattice(p), cover);
  emb.tight = t.tight;
  emb.nontight_cover_count = t.nontight_cover_count;
  return emb;
}

/// Direct check that the coordinate image of G is an induced subgraph of the
/// factor product.
inline bool embedding_is_induced_directly(const ReflexiveGraph& g,
                                          const EmbeddingResult& emb) {
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v) !=
          product_adjacent(emb.factors, emb.coords[u], emb.coords[v]))
        return false;
  return true;
}

namespace detail {

/// Full consistency check used after a tightening contraction: coordinates
/// must stay injective, closed under componentwise min/max, carry the same
/// comparability pattern as before, and induce exactly G.
inline bool valid_induced_embedding(
    const ReflexiveGraph& g, const std::vector<ReflexiveGraph>& factors,
    const std::vector<std::vector<std::size_t>>& coords,
    const std::vector<std::vector<std::size_t>>& reference_coords) {
  std::size_t n = g.size();
  std::size_t d = factors.size();
  auto leq = [d](const std::vector<std::size_t>& x,
                 const std::vector<std::size_t>& y) {
    for (std::size_t i = 0; i < d; ++i)
      if (x[i] > y[i]) return false;
    return true;
  };
  auto find = [&](const std::vector<std::size_t>& x) -> std::size_t {
    for (std::size_t k = 0; k < n; ++k)
      if (coords[k] == x) return k;
    return n;
  };
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && coords[u] == coords[v]) return false;
      if (leq(coords[u], coords[v]) !=
          leq(reference_coords[u], reference_coords[v]))
        return false;
      std::vector<std::size_t> lo(d), hi(d);
      for (std::size_t i = 0; i < d; ++i) {
        lo[i] = std::min(coords[u][i], coords[v][i]);
        hi[i] = std::max(coords[u][i], coords[v][i]);
      }
      if (find(lo) == n || find(hi) == n) return false;
      if (u < v && g.adjacent(u, v) != product_adjacent(factors, coords[u], coords[v]))
        return false;
    }
  return true;
}

}  // namespace detail

/// Greedy local tightening: while some factor has two consecutive positions
/// with equal neighbourhoods, try contracting them and shifting the higher
/// coordinates down; keep the contraction only if the result still is an
/// induced embedding of the same pair. Removed vertex intervals are
/// recomputed from the final image; contractions that fail verification are
/// skipped.
inline EmbeddingResult tighten_factors(const EmbeddingResult& emb,
                                       const ReflexiveGraph& g) {
  EmbeddingResult cur = emb;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.factors.size() && !changed; ++i) {
      const ReflexiveGraph& gi = cur.factors[i];
      for (std::size_t a = 0; a + 1 < gi.size() && !changed; ++a) {
        if (gi.neighbours(a) != gi.neighbours(a + 1)) continue;
        // contract positions a and a+1 of factor i
        ReflexiveGraph contracted(gi.size() - 1);
        auto remap = [a](std::size_t pos) { return pos > a ? pos - 1 : pos; };
        for (auto [u, v] : gi.edges())
          if (remap(u) != remap(v)) contracted.add_edge(remap(u), remap(v));
        auto factors = cur.factors;
        factors[i] = contracted;
        auto coords = cur.coords;
        for (auto& x : coords)
          if (x[i] > a) --x[i];
        if (!detail::valid_induced_embedding(g, factors, coords, cur.coords))
          continue;
        cur.factors = std::move(factors);
        cur.coords = std::move(coords);
        cur.product.sizes[i] -= 1;
        changed = true;
      }
    }
  }
  // removed vertex intervals of the final image: all maximal intervals lying
  // fully outside the image
  cur.removed_vertices.clear();
  cur.removed_edges.clear();
  auto all = cur.product.vertices();
  auto in_image = [&](const std::vector<std::size_t>& x) {
    for (const auto& c : cur.coords)
      if (c == x) return true;
    return false;
  };
  std::size_t d = cur.product.dimensions();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t alpha = 1; alpha <= cur.product.sizes[i]; ++alpha)
        for (std::size_t beta = 0; beta < cur.product.sizes[j]; ++beta) {
          VertexInterval v{alpha, i, beta, j};
          if (v.empty_in(cur.product)) continue;
          bool outside = true;
          for (const auto& x : all)
            if (v.contains(x) && in_image(x)) {
              outside = false;
              break;
            }
          if (outside) cur.removed_vertices.push_back(v);
        }
  // keep only maximal intervals per axis pair
  auto& vi = cur.removed_vertices;
  vi.erase(std::remove_if(vi.begin(), vi.end(),
                          [&](const VertexInterval& v) {
                            for (const auto& w : vi)
                              if (w.i == v.i && w.j == v.j && !(w == v) &&
                                  w.alpha <= v.alpha && w.beta >= v.beta)
                                return true;
                            return false;
                          }),
           vi.end());
  cur.induced = embedding_is_induced_directly(g, cur);
  // tightness of the contracted image: covers of the image order vs unit steps
  cur.nontight_cover_count = 0;
  {
    std::size_t n = cur.coords.size();
    auto leq = [&](std::size_t u, std::size_t v) {
      for (std::size_t k = 0; k < d; ++k)
        if (cur.coords[u][k] > cur.coords[v][k]) return false;
      return true;
    };
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (u == v || !leq(u, v)) continue;
        bool cover = true;
        for (std::size_t w = 0; w < n && cover; ++w)
          if (w != u && w != v && leq(u, w) && leq(w, v)) cover = false;
        if (!cover) continue;
        std::size_t steps = 0;
        for (std::size_t k = 0; k < d; ++k)
          steps += cur.coords[v][k] - cur.coords[u][k];
        if (steps > 1) ++cur.nontight_cover_count;
      }
  }
  cur.tight = cur.nontight_cover_count == 0;
  return cur;
}

}  // namespace dlgraph
