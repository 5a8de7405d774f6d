#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dlgraph/graph.hpp"
#include "dlgraph/lattice.hpp"

namespace dlgraph {

/// Edge pair violating the polymorphism identity: u ~ u' and v ~ v' but one
/// of (u^v, u'^v') or (uvv, u'vv') is a non-edge.
struct CompatibilityWitness {
  std::size_t u, u2, v, v2;
  bool meet_failed;  // otherwise the join pair failed
};

/// L is compatible with G iff for every pair of edges u~u', v~v' both
/// (u ^ v) ~ (u' ^ v') and (u v v) ~ (u' v v'). Loop edges are included;
/// the witness is lexicographically least.
inline std::optional<CompatibilityWitness> compatibility_witness(
    const ReflexiveGraph& g, const Lattice& l) {
  if (g.size() != l.size())
    throw std::invalid_argument("graph and lattice sizes differ");
  std::size_t n = g.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t u2 = 0; u2 < n; ++u2) {
      if (!g.adjacent(u, u2)) continue;
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t v2 = 0; v2 < n; ++v2) {
          if (!g.adjacent(v, v2)) continue;
          if (!g.adjacent(l.meet(u, v), l.meet(u2, v2)))
            return CompatibilityWitness{u, u2, v, v2, true};
          if (!g.adjacent(l.join(u, v), l.join(u2, v2)))
            return CompatibilityWitness{u, u2, v, v2, false};
        }
    }
  return std::nullopt;
}

inline bool check_compatible(const ReflexiveGraph& g, const Lattice& l) {
  return !compatibility_witness(g, l).has_value();
}

struct IdentityReport {
  bool min_max_holds = true;
  bool vee_holds = true;
  /// witnesses, meaningful when the respective identity fails
  std::size_t mm_u = 0, mm_u2 = 0, mm_v = 0, mm_v2 = 0;
  std::size_t vee_u = 0, vee_v = 0, vee_w = 0;

  bool all_hold() const { return min_max_holds && vee_holds; }
};

/// Verifies the min-max identity and the vee identity over the lattice
/// order. Both are consequences of compatibility.
inline IdentityReport check_identities(const ReflexiveGraph& g, const Lattice& l) {
  IdentityReport rep;
  std::size_t n = g.size();
  const Poset& p = l.order;
  for (std::size_t u2 = 0; u2 < n && rep.min_max_holds; ++u2)
    for (std::size_t u = 0; u < n && rep.min_max_holds; ++u) {
      if (!p.leq(u2, u)) continue;
      for (std::size_t v = 0; v < n && rep.min_max_holds; ++v) {
        if (!p.leq(u, v)) continue;
        for (std::size_t v2 = 0; v2 < n; ++v2)
          if (p.leq(v, v2) && g.adjacent(u2, v2) && !g.adjacent(u, v)) {
            rep.min_max_holds = false;
            rep.mm_u2 = u2, rep.mm_u = u, rep.mm_v = v, rep.mm_v2 = v2;
            break;
          }
      }
    }
  for (std::size_t u = 0; u < n && rep.vee_holds; ++u)
    for (std::size_t v = 0; v < n && rep.vee_holds; ++v) {
      if (!g.adjacent(u, v)) continue;
      for (std::size_t w = 0; w < n; ++w) {
        if (!g.adjacent(v, w) || g.adjacent(u, w)) continue;
        bool peak = p.leq(u, v) && p.leq(w, v);
        bool valley = p.leq(v, u) && p.leq(v, w);
        if (peak || valley) {
          rep.vee_holds = false;
          rep.vee_u = u, rep.vee_v = v, rep.vee_w = w;
          break;
        }
      }
    }
  return rep;
}

/// Necessary condition for compatibility of a connected graph: every cover
/// of L must be an edge of G.
inline bool check_hasse_subgraph(const ReflexiveGraph& g, const Lattice& l) {
  for (auto [x, y] : l.order.covers())
    if (!g.adjacent(x, y)) return false;
  return true;
}

/// Ternary majority operation (x^y) v (y^z) v (x^z), flattened with z fastest.
inline std::vector<std::size_t> majority_from_lattice(const Lattice& l) {
  std::size_t n = l.size();
  std::vector<std::size_t> f(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        f[(x * n + y) * n + z] =
            l.join(l.join(l.meet(x, y), l.meet(y, z)), l.meet(x, z));
  return f;
}

/// Brute-force check that a ternary operation preserves edges of G.
inline bool is_ternary_polymorphism(const ReflexiveGraph& g,
                                    const std::vector<std::size_t>& f) {
  std::size_t n = g.size();
  auto edges = g.edges();
  std::vector<std::pair<std::size_t, std::size_t>> ordered;
  for (std::size_t v = 0; v < n; ++v) ordered.emplace_back(v, v);
  for (auto [u, v] : edges) {
    ordered.emplace_back(u, v);
    ordered.emplace_back(v, u);
  }
  for (auto [x1, y1] : ordered)
    for (auto [x2, y2] : ordered)
      for (auto [x3, y3] : ordered) {
        auto a = f[(x1 * n + x2) * n + x3];
        auto b = f[(y1 * n + y2) * n + y3];
        if (!g.adjacent(a, b)) return false;
      }
  return true;
}

}  // namespace dlgraph
