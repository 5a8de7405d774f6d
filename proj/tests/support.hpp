#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "dlgraph/gpa.hpp"
#include "dlgraph/graph.hpp"
#include "dlgraph/poset.hpp"

namespace support {

using namespace dlgraph;

/// Four-element poset a < c, b < c, b < d with elements a,b,c,d = 0,1,2,3.
inline Poset fence_poset() {
  return poset_from_covers(4, {{0, 2}, {1, 2}, {1, 3}});
}

/// Every comparability and loop except the arc (b, c).
inline ArcSet fence_arcs() {
  auto a = ArcSet::all_arcs(fence_poset());
  a.remove(1, 2);
  return a;
}

/// Index of the downset with the given members in the canonical list.
inline std::size_t ds_index(const std::vector<Bitset>& downsets,
                            std::initializer_list<std::size_t> members,
                            std::size_t n) {
  Bitset want(n);
  for (auto m : members) want.set(m);
  for (std::size_t k = 0; k < downsets.size(); ++k)
    if (downsets[k] == want) return k;
  return downsets.size();
}

inline ReflexiveGraph path_graph(std::size_t n) {
  ReflexiveGraph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline ReflexiveGraph star_graph(std::size_t leaves) {
  ReflexiveGraph g(leaves + 1);
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline ReflexiveGraph complete_graph(std::size_t n) {
  ReflexiveGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// 0-a-1-b-0 with vertices 0,a,1,b = 0,1,2,3: edges 01, 12, 23, 30.
inline ReflexiveGraph cycle4() {
  ReflexiveGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  return g;
}

/// 3x3 grid with king moves: the product of two reflexive 3-paths,
/// vertex = 3 * row + column.
inline ReflexiveGraph king_grid() {
  ReflexiveGraph g(9);
  auto at = [](std::size_t r, std::size_t c) { return 3 * r + c; };
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          int r2 = static_cast<int>(r) + dr, c2 = static_cast<int>(c) + dc;
          if (r2 < 0 || r2 > 2 || c2 < 0 || c2 > 2) continue;
          if (dr == 0 && dc == 0) continue;
          g.add_edge(at(r, c), at(r2, c2));
        }
  return g;
}

struct Instance {
  Poset p;
  ArcSet a;
};

/// Random poset (closure of random relations) with a random sub-digraph A;
/// each comparability, loops included, kept with probability 3/4.
inline Instance random_instance(std::mt19937_64& rng, std::size_t max_n = 6) {
  std::size_t n = 1 + rng() % max_n;
  Poset p(n);
  std::size_t tries = rng() % (2 * n + 1);
  for (std::size_t t = 0; t < tries; ++t) {
    std::size_t x = rng() % n, y = rng() % n;
    if (x == y) continue;
    try {
      p.add_leq(x, y);
    } catch (const std::invalid_argument&) {
    }
  }
  ArcSet a(n);
  for (auto [x, y] : p.comparabilities())
    if (rng() % 4 != 0) a.add(x, y);
  return {p, a};
}

/// Random valid chain cover: walk a linear extension, appending each element
/// to a random compatible chain or opening a new one.
inline ChainCover random_cover(const Poset& p, std::mt19937_64& rng) {
  std::vector<std::size_t> order(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.down(a).count() < p.down(b).count();
  });
  ChainCover cover;
  for (auto v : order) {
    std::vector<std::size_t> fits;
    for (std::size_t c = 0; c < cover.chains.size(); ++c)
      if (p.lt(cover.chains[c].back(), v)) fits.push_back(c);
    if (!fits.empty() && rng() % 2 == 0)
      cover.chains[fits[rng() % fits.size()]].push_back(v);
    else
      cover.chains.push_back({v});
  }
  return cover;
}

}  // namespace support
