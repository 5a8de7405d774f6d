#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "dlgraph/compat.hpp"
#include "dlgraph/graph.hpp"
#include "dlgraph/lattice.hpp"

namespace dlgraph {

namespace detail {

/// Relation matrix used while enumerating: for each decided pair either a
/// strict order or a pledge to stay incomparable.
struct PosetSearch {
  std::size_t n;
  std::vector<Bitset> below;       // closure, below[y] ∋ x means x <= y
  std::vector<std::vector<bool>> incomp;  // pledged incomparable
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::function<void(const Poset&)> emit;

  explicit PosetSearch(std::size_t n_) : n(n_), below(n_, Bitset(n_)),
      incomp(n_, std::vector<bool>(n_, false)) {
    for (std::size_t x = 0; x < n; ++x) below[x].set(x);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  bool leq(std::size_t x, std::size_t y) const { return below[y].test(x); }

  /// Adds x < y plus transitive consequences; fails on a cycle or on a pair
  /// pledged incomparable.
  bool add(std::size_t x, std::size_t y) {
    if (leq(y, x)) return false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq(a, x)) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!leq(y, b) || leq(a, b)) continue;
        if (leq(b, a) || incomp[a][b]) return false;
        below[b].set(a);
      }
    }
    return true;
  }

  void run(std::size_t k) {
    if (k == pairs.size()) {
      Poset p(n);
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x)
          if (x != y && leq(x, y)) p.add_leq(x, y);
      emit(p);
      return;
    }
    auto [i, j] = pairs[k];
    if (leq(i, j) || leq(j, i)) {
      run(k + 1);
      return;
    }
    // branch: incomparable
    incomp[i][j] = incomp[j][i] = true;
    run(k + 1);
    incomp[i][j] = incomp[j][i] = false;
    // branch: i < j, then j < i
    for (int dir = 0; dir < 2; ++dir) {
      auto saved = below;
      if (add(dir ? j : i, dir ? i : j))
        run(k + 1);
      below = std::move(saved);
    }
  }
};

}  // namespace detail

/// Streams every labelled partial order on n elements exactly once, by
/// three-way branching over pairs in lexicographic order with closure
/// propagation.
inline void enumerate_posets(std::size_t n,
                             const std::function<void(const Poset&)>& emit) {
  if (n > 7) throw std::invalid_argument("poset enumeration capped at n = 7");
  if (n == 0) return;
  detail::PosetSearch search(n);
  search.emit = emit;
  search.run(0);
}

inline std::size_t count_posets(std::size_t n) {
  std::size_t c = 0;
  enumerate_posets(n, [&](const Poset&) { ++c; });
  return c;
}

/// Independent slow count: every relation on n elements filtered by the
/// order axioms. Only for cross-checking the enumerator at n <= 4.
inline std::size_t count_posets_dumb(std::size_t n) {
  std::size_t m = n * n, count = 0;
  if (n == 0) return 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    auto rel = [&](std::size_t x, std::size_t y) {
      return (mask >> (x * n + y)) & 1;
    };
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      if (!rel(x, x)) ok = false;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (x != y && rel(x, y) && rel(y, x)) ok = false;
        for (std::size_t z = 0; z < n && ok; ++z)
          if (rel(x, y) && rel(y, z) && !rel(x, z)) ok = false;
      }
    if (ok) ++count;
  }
  return count;
}

/// Exhaustive ground truth: all lattices on V(G) compatible with G,
/// optionally restricted to distributive ones. The Hasse-subgraph pruning
/// rule (covers must be edges of a connected G) only discards posets that
/// could never yield a compatible lattice.
inline std::vector<Lattice> oracle_recognize(const ReflexiveGraph& g,
                                             bool distributive_only,
                                             bool prune = true) {
  if (g.size() > 6) throw std::invalid_argument("oracle capped at 6 vertices");
  std::vector<Lattice> found;
  bool connected = is_connected(g);
  enumerate_posets(g.size(), [&](const Poset& p) {
    if (prune && connected) {
      for (auto [x, y] : p.covers())
        if (!g.adjacent(x, y)) return;
    }
    // bounds must exist
    std::size_t zero = p.size(), one = p.size();
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (p.down(v).count() == p.size()) one = v;
      bool min = true;
      for (std::size_t w = 0; w < p.size(); ++w)
        if (!p.leq(v, w)) min = false;
      if (min) zero = v;
    }
    if (zero == p.size() || one == p.size()) return;
    auto built = lattice_from_order(p, zero, one);
    if (std::holds_alternative<NotALattice>(built)) return;
    Lattice l = std::get<Lattice>(built);
    if (distributive_only && !is_distributive(l)) return;
    if (check_compatible(g, l)) found.push_back(std::move(l));
  });
  return found;
}

}  // namespace dlgraph
