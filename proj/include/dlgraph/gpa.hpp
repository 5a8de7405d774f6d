#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dlgraph/graph.hpp"
#include "dlgraph/lattice.hpp"
#include "dlgraph/poset.hpp"

namespace dlgraph {

/// Set of arcs (x, y) with x <= y in an associated poset. Loops (x, x) are
/// ordinary arcs: a missing loop at x forbids every edge separating x.
class ArcSet {
 public:
  ArcSet() = default;
  explicit ArcSet(std::size_t n) : n_(n), to_(n, Bitset(n)) {}

  std::size_t size() const { return n_; }

  bool has(std::size_t x, std::size_t y) const { return to_[x].test(y); }

  void add(std::size_t x, std::size_t y) { to_[x].set(y); }
  void remove(std::size_t x, std::size_t y) { to_[x].reset(y); }

  /// All arcs, loops included, (x, y) with x <= y expected.
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (to_[x].test(y)) out.emplace_back(x, y);
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>> non_loop_arcs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [x, y] : arcs())
      if (x != y) out.emplace_back(x, y);
    return out;
  }

  bool valid_for(const Poset& p) const {
    for (auto [x, y] : arcs())
      if (!p.leq(x, y)) return false;
    return true;
  }

  static ArcSet all_arcs(const Poset& p) {
    ArcSet a(p.size());
    for (auto [x, y] : p.comparabilities()) a.add(x, y);
    return a;
  }

  static ArcSet loops_only(std::size_t n) {
    ArcSet a(n);
    for (std::size_t x = 0; x < n; ++x) a.add(x, x);
    return a;
  }

  void add_all_loops() {
    for (std::size_t x = 0; x < n_; ++x) to_[x].set(x);
  }

  bool operator==(const ArcSet& o) const { return n_ == o.n_ && to_ == o.to_; }
  bool operator!=(const ArcSet& o) const { return !(*this == o); }

 private:
  std::size_t n_ = 0;
  std::vector<Bitset> to_;
};

/// Drops every useless arc: keeps (x', y') only when each (x, y) with
/// x' <= x <= y <= y' is also present. The result satisfies the directed
/// min-max identity and defines the same graph G(P, A).
inline ArcSet normalize_arcs(const Poset& p, const ArcSet& a) {
  ArcSet out(a.size());
  for (auto [xo, yo] : a.arcs()) {
    bool keep = true;
    for (std::size_t x = 0; x < p.size() && keep; ++x) {
      if (!(p.leq(xo, x) && p.leq(x, yo))) continue;
      for (std::size_t y = 0; y < p.size() && keep; ++y)
        if (p.leq(x, y) && p.leq(y, yo) && !a.has(x, y)) keep = false;
    }
    if (keep) out.add(xo, yo);
  }
  return out;
}

/// The interval-minimal missing arcs: (x, y) outside A such that every other
/// arc inside the interval [x, y] is in A. Composing these with <= on both
/// sides regenerates the whole complement of the maximal arc set.
inline ArcSet reduced_complement(const Poset& p, const ArcSet& a) {
  ArcSet out(p.size());
  for (auto [x, y] : p.comparabilities()) {
    if (a.has(x, y)) continue;
    bool minimal = true;
    for (std::size_t u = 0; u < p.size() && minimal; ++u) {
      if (!(p.leq(x, u) && p.leq(u, y))) continue;
      for (std::size_t v = 0; v < p.size() && minimal; ++v) {
        if (!(p.leq(u, v) && p.leq(v, y))) continue;
        if (u == x && v == y) continue;
        if (!a.has(u, v)) minimal = false;
      }
    }
    if (minimal) out.add(x, y);
  }
  return out;
}

/// Adjacency of Definition "G(P,A)": D ~ D' iff A contains every arc of P
/// whose endpoints both lie in D \ D' or both in D' \ D.
inline bool gpa_adjacent(const Poset& p, const ArcSet& a, const Bitset& d,
                         const Bitset& e) {
  for (auto side : {d - e, e - d})
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (!side.test(x)) continue;
      for (std::size_t y = 0; y < p.size(); ++y)
        if (side.test(y) && p.leq(x, y) && !a.has(x, y)) return false;
    }
  return true;
}

/// The graph on the canonical list of downsets of P, adjacent per gpa_adjacent.
inline ReflexiveGraph construct_gpa(const Poset& p, const ArcSet& a) {
  auto downsets = enumerate_downsets(p);
  ReflexiveGraph g(downsets.size());
  for (std::size_t i = 0; i < downsets.size(); ++i)
    for (std::size_t j = i + 1; j < downsets.size(); ++j)
      if (gpa_adjacent(p, a, downsets[i], downsets[j])) g.add_edge(i, j);
  return g;
}

/// Alternate adjacency test: D ~ D' iff for every arc (y, x) of the
/// complement of A, x in D implies y in D', and symmetrically.
inline bool adjacency_alt(const Poset& p, const ArcSet& a, const Bitset& d,
                          const Bitset& e) {
  for (auto [y, x] : p.comparabilities()) {
    if (a.has(y, x)) continue;
    if (d.test(x) && !e.test(y)) return false;
    if (e.test(x) && !d.test(y)) return false;
  }
  return true;
}

/// Recovers the arc set of a compatible pair: on J_L, the arc (y, x) with
/// y <= x is present iff the lattice elements for down(x) n C_y and down(x)
/// are adjacent in G, where C_y is the maximum downset avoiding y. With the
/// Birkhoff isomorphism, G(J_L, extract_arcs(G, L)) recovers G.
inline ArcSet extract_arcs(const ReflexiveGraph& g, const Lattice& l) {
  if (g.size() != l.size())
    throw std::invalid_argument("graph and lattice sizes differ");
  auto ji = join_irreducibles(l);
  const Poset& j = ji.poset;
  std::size_t m = j.size();
  auto element_of = [&](const Bitset& downset) -> std::size_t {
    for (std::size_t x = 0; x < l.size(); ++x)
      if (ji.iso[x] == downset) return x;
    throw std::invalid_argument("lattice is not distributive: iso not onto");
  };
  ArcSet a(m);
  for (std::size_t y = 0; y < m; ++y) {
    // maximum downset of J_L not containing y
    Bitset cy(m);
    for (std::size_t z = 0; z < m; ++z)
      if (!j.leq(y, z)) cy.set(z);
    for (std::size_t x = 0; x < m; ++x) {
      if (!j.leq(y, x)) continue;
      std::size_t whole = element_of(j.down(x));
      std::size_t cut = element_of(j.down(x) & cy);
      if (g.adjacent(whole, cut)) a.add(y, x);
    }
  }
  return a;
}

}  // namespace dlgraph
