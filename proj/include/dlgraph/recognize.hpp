#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dlgraph/compat.hpp"
#include "dlgraph/graph.hpp"
#include "dlgraph/lattice.hpp"

namespace dlgraph {

/// Per-edge direction state of the skeleton orientation. Arcs point from the
/// greater lattice candidate to the smaller (towards zero).
class PartialOrientation {
 public:
  enum class State { unoriented, forward, backward, conflict };

  PartialOrientation() = default;
  explicit PartialOrientation(std::size_t n)
      : n_(n), state_(n * n, State::unoriented) {}

  /// state of edge {u, v} seen from u: forward means u -> v
  State state(std::size_t u, std::size_t v) const {
    return state_[u * n_ + v];
  }

  bool oriented(std::size_t u, std::size_t v) const {
    State s = state(u, v);
    return s == State::forward || s == State::backward;
  }

  bool has_arc(std::size_t u, std::size_t v) const {
    return state(u, v) == State::forward;
  }

  /// Directs u -> v; opposite firings degrade the edge to conflict.
  /// Returns true when anything changed.
  bool orient(std::size_t u, std::size_t v) {
    State s = state(u, v);
    if (s == State::forward || s == State::conflict) return false;
    if (s == State::backward) {
      state_[u * n_ + v] = state_[v * n_ + u] = State::conflict;
      return true;
    }
    state_[u * n_ + v] = State::forward;
    state_[v * n_ + u] = State::backward;
    return true;
  }

  bool any_conflict() const {
    for (auto s : state_)
      if (s == State::conflict) return true;
    return false;
  }

  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<State> state_;
};

/// An edge xy is dispensable when some z interpolates it: N(x) c N(z) c N(y)
/// strictly, or symmetrically, or N(x) n N(y) is strictly below both
/// N(x) n N(z) and N(y) n N(z).
inline bool edge_dispensable(const ReflexiveGraph& g, std::size_t x, std::size_t y) {
  const Bitset& nx = g.neighbours(x);
  const Bitset& ny = g.neighbours(y);
  Bitset nxy = nx & ny;
  for (std::size_t z = 0; z < g.size(); ++z) {
    const Bitset& nz = g.neighbours(z);
    if (nx.proper_subset_of(nz) && nz.proper_subset_of(ny)) return true;
    if (ny.proper_subset_of(nz) && nz.proper_subset_of(nx)) return true;
    if (nxy.proper_subset_of(nx & nz) && nxy.proper_subset_of(ny & nz)) return true;
  }
  return false;
}

struct Skeleton {
  std::vector<std::pair<std::size_t, std::size_t>> dispensable;
  ReflexiveGraph skeleton;
};

/// Removes every dispensable non-loop edge; loops stay. For a compatible
/// pair with G R-thin the result still contains the Hasse graph of the
/// lattice, and each surviving edge joins comparable elements.
inline Skeleton dispensable_edges(const ReflexiveGraph& g) {
  Skeleton out;
  out.skeleton = ReflexiveGraph(g.size());
  for (auto [u, v] : g.edges()) {
    if (edge_dispensable(g, u, v))
      out.dispensable.emplace_back(u, v);
    else
      out.skeleton.add_edge(u, v);
  }
  return out;
}

/// Layered orientation pass. Layers are BFS distances from `one`; round j
/// orients skeleton edges into and inside layer j. Intra-layer rules use
/// reachability over arcs oriented so far and are iterated to a fixpoint
/// within the round, so the result does not depend on edge scan order.
inline PartialOrientation orient_skeleton(const ReflexiveGraph& g,
                                          const ReflexiveGraph& s,
                                          std::size_t one, std::size_t zero) {
  if (one == zero) throw std::invalid_argument("one and zero must differ");
  std::size_t n = g.size();
  PartialOrientation ori(n);
  auto layers = distance_layers(g, one);
  if (layers.dist[zero] == DistanceLayers::npos) return ori;
  std::size_t depth = layers.dist[zero];

  // reachability u' -> ... -> v' over current arcs among vertices of
  // distance < j (the partially oriented D_{j-1})
  auto reaches = [&](std::size_t from, std::size_t to, std::size_t j) {
    if (from == to) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v) {
        if (seen[v] || !ori.has_arc(u, v)) continue;
        if (layers.dist[v] == DistanceLayers::npos || layers.dist[v] >= j) continue;
        if (v == to) return true;
        seen[v] = true;
        stack.push_back(v);
      }
    }
    return false;
  };

  for (std::size_t j = 1; j <= depth; ++j) {
    // rule (i): edges from layer j-1 down into layer j
    for (auto [u, v] : s.edges()) {
      auto du = layers.dist[u], dv = layers.dist[v];
      if (du == j - 1 && dv == j) ori.orient(u, v);
      if (dv == j - 1 && du == j) ori.orient(v, u);
    }
    // rules (ii a-c) on intra-layer edges, to a fixpoint
    bool fired = true;
    while (fired) {
      fired = false;
      for (auto [u, v] : s.edges()) {
        if (layers.dist[u] != j || layers.dist[v] != j) continue;
        for (int swap = 0; swap < 2; ++swap) {
          std::size_t a = swap ? v : u;
          std::size_t b = swap ? u : v;
          // (iia): N(a)-N(b) holds a vertex of D_{j-1} above every
          // D_{j-1}-neighbour of b
          bool rule_a = false;
          for (std::size_t a2 = 0; a2 < n && !rule_a; ++a2) {
            if (!g.adjacent(a, a2) || g.adjacent(b, a2)) continue;
            if (layers.dist[a2] == DistanceLayers::npos || layers.dist[a2] >= j)
              continue;
            bool above_all = true;
            for (std::size_t b2 = 0; b2 < n && above_all; ++b2) {
              if (!g.adjacent(b, b2)) continue;
              if (layers.dist[b2] == DistanceLayers::npos || layers.dist[b2] >= j)
                continue;
              if (!reaches(a2, b2, j)) above_all = false;
            }
            if (above_all) rule_a = true;
          }
          // (iib): N(b)-N(a) holds a vertex of D_{j-1} below every
          // D_{j-1}-neighbour of a
          bool rule_b = false;
          for (std::size_t b2 = 0; b2 < n && !rule_b; ++b2) {
            if (!g.adjacent(b, b2) || g.adjacent(a, b2)) continue;
            if (layers.dist[b2] == DistanceLayers::npos || layers.dist[b2] >= j)
              continue;
            bool below_all = true;
            for (std::size_t a2 = 0; a2 < n && below_all; ++a2) {
              if (!g.adjacent(a, a2)) continue;
              if (layers.dist[a2] == DistanceLayers::npos || layers.dist[a2] >= j)
                continue;
              if (!reaches(a2, b2, j)) below_all = false;
            }
            if (below_all) rule_b = true;
          }
          // (iic): N(b)-N(a) reaches into layer j or beyond while missing
          // layer j-1 entirely
          bool has_far = false, has_near = false;
          for (std::size_t w = 0; w < n; ++w) {
            if (!g.adjacent(b, w) || g.adjacent(a, w)) continue;
            if (layers.dist[w] == DistanceLayers::npos || layers.dist[w] >= j)
              has_far = true;
            else if (layers.dist[w] == j - 1)
              has_near = true;
          }
          bool rule_c = has_far && !has_near;
          if ((rule_a || rule_b || rule_c) && ori.orient(a, b)) fired = true;
        }
      }
    }
  }
  return ori;
}

struct OrientationFailure {
  std::string reason;  // unoriented-edge | conflict | cycle | not-a-lattice | wrong-bounds
};

/// Takes the reflexive-transitive closure of the oriented arcs (arcs point
/// downwards) and builds the lattice with the given bounds.
inline std::variant<Lattice, OrientationFailure> lattice_from_orientation(
    const ReflexiveGraph& s, const PartialOrientation& ori, std::size_t zero,
    std::size_t one) {
  std::size_t n = s.size();
  if (ori.any_conflict()) return OrientationFailure{"conflict"};
  for (auto [u, v] : s.edges())
    if (!ori.oriented(u, v)) return OrientationFailure{"unoriented-edge"};
  // closure; arc u -> v means u > v, so below[u] accumulates {v : v <= u}
  std::vector<Bitset> below(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v) below[v].set(v);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (!ori.has_arc(u, v)) continue;
        Bitset merged = below[u] | below[v];
        if (merged != below[u]) {
          below[u] = merged;
          grew = true;
        }
      }
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && below[u].test(v) && below[v].test(u))
        return OrientationFailure{"cycle"};
  Poset p(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && below[u].test(v)) p.add_leq(v, u);
  for (std::size_t v = 0; v < n; ++v)
    if (!p.leq(zero, v) || !p.leq(v, one))
      return OrientationFailure{"wrong-bounds"};
  auto built = lattice_from_order(p, zero, one);
  if (std::holds_alternative<NotALattice>(built))
    return OrientationFailure{"not-a-lattice"};
  return std::get<Lattice>(built);
}

struct RecognitionResult {
  enum class Verdict { yes, no, inconclusive };
  Verdict verdict = Verdict::no;
  std::optional<Lattice> lattice;
  std::string reason;

  static RecognitionResult yes(Lattice l) {
    return {Verdict::yes, std::move(l), ""};
  }
  static RecognitionResult no(std::string why) {
    return {Verdict::no, std::nullopt, std::move(why)};
  }
  static RecognitionResult inconclusive(std::string why) {
    return {Verdict::inconclusive, std::nullopt, std::move(why)};
  }
};

/// Decides whether a connected R-thin reflexive graph has a compatible
/// distributive lattice. Tries every (zero, one) candidate pair, orients the
/// skeleton, closes it to a lattice and post-verifies distributivity and
/// compatibility; the first verified lattice (least candidate pair) wins.
inline RecognitionResult recognize_dl(const ReflexiveGraph& g,
                                      bool prune_candidates = true) {
  if (!is_connected(g))
    throw std::invalid_argument("recognize_dl needs a connected graph; use recognize_driver");
  if (!is_r_thin(g))
    throw std::invalid_argument("recognize_dl needs an R-thin graph; use recognize_driver");
  std::size_t n = g.size();
  if (n == 1) {
    auto l = lattice_from_order(Poset(1), 0, 0);
    return RecognitionResult::yes(std::get<Lattice>(l));
  }
  auto sk = dispensable_edges(g);
  // zero and one must each touch a skeleton edge, and every degree-one
  // vertex of G must be zero or one
  std::vector<std::size_t> forced;
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) == 1) forced.push_back(v);
  if (prune_candidates && forced.size() > 2)
    return RecognitionResult::no("more than two degree-one vertices");
  auto candidate_ok = [&](std::size_t v) {
    return !prune_candidates || sk.skeleton.degree(v) > 0;
  };
  for (std::size_t zero = 0; zero < n; ++zero) {
    if (!candidate_ok(zero)) continue;
    for (std::size_t one = 0; one < n; ++one) {
      if (one == zero || !candidate_ok(one)) continue;
      if (prune_candidates) {
        bool ok = true;
        for (auto f : forced)
          if (f != zero && f != one) ok = false;
        if (!ok) continue;
      }
      auto ori = orient_skeleton(g, sk.skeleton, one, zero);
      auto built = lattice_from_orientation(sk.skeleton, ori, zero, one);
      if (std::holds_alternative<OrientationFailure>(built)) continue;
      Lattice l = std::get<Lattice>(built);
      if (!is_distributive(l)) continue;
      if (!check_compatible(g, l)) continue;
      return RecognitionResult::yes(std::move(l));
    }
  }
  return RecognitionResult::no("no candidate bounds yield a compatible distributive lattice");
}

}  // namespace dlgraph

#include "dlgraph/oracle.hpp"

namespace dlgraph {

/// Per-component recognition for R-thin graphs, assembled with the simple
/// join of the component lattices. Lattice elements keep G's vertex indices.
inline RecognitionResult recognize_r_thin(const ReflexiveGraph& g,
                                          bool prune_candidates = true) {
  auto comps = components(g);
  if (comps.size() == 1) return recognize_dl(g, prune_candidates);
  std::vector<Lattice> parts;
  std::vector<std::size_t> vertex_order;  // simple-join element -> G vertex
  for (const auto& comp : comps) {
    auto sub = induced_subgraph(g, comp);
    auto res = recognize_dl(sub, prune_candidates);
    if (res.verdict != RecognitionResult::Verdict::yes)
      return RecognitionResult::no("component is not a DL-graph: " + res.reason);
    parts.push_back(*res.lattice);
    for (auto v : comp) vertex_order.push_back(v);
  }
  Lattice joined = simple_join(parts);
  // renumber elements back to G's vertex labels
  std::size_t n = g.size();
  Lattice l;
  l.order = Poset(n);
  l.meet_table.assign(n * n, 0);
  l.join_table.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && joined.order.lt(a, b))
        l.order.add_leq(vertex_order[a], vertex_order[b]);
      l.meet_table[vertex_order[a] * n + vertex_order[b]] =
          vertex_order[joined.meet(a, b)];
      l.join_table[vertex_order[a] * n + vertex_order[b]] =
          vertex_order[joined.join(a, b)];
    }
  l.zero = vertex_order[joined.zero];
  l.one = vertex_order[joined.one];
  if (!is_distributive(l) || !check_compatible(g, l))
    return RecognitionResult::no("simple join failed verification");
  return RecognitionResult::yes(std::move(l));
}

/// Entry point for arbitrary reflexive graphs. R-thin graphs are decided
/// exactly; otherwise the R-thin reduction acts as a necessary filter, with
/// the brute-force oracle settling small instances.
inline RecognitionResult recognize_driver(const ReflexiveGraph& g,
                                          bool prune_candidates = true) {
  if (is_r_thin(g)) return recognize_r_thin(g, prune_candidates);
  auto red = r_thin_reduction(g);
  auto res = recognize_r_thin(red.quotient, prune_candidates);
  if (res.verdict == RecognitionResult::Verdict::no)
    return RecognitionResult::no("R-thin reduction is not a DL-graph: " + res.reason);
  if (g.size() <= 6) {
    auto lattices = oracle_recognize(g, /*distributive_only=*/true);
    if (lattices.empty())
      return RecognitionResult::no("exhaustive search found no compatible distributive lattice");
    return RecognitionResult::yes(lattices.front());
  }
  return RecognitionResult::inconclusive(
      "reduction is a DL-graph but the graph is not R-thin");
}

}  // namespace dlgraph
