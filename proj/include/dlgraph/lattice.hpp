#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "dlgraph/poset.hpp"

namespace dlgraph {

/// Finite lattice: a poset with total meet/join tables and bounds.
struct Lattice {
  Poset order;
  /// row-major n*n tables
  std::vector<std::size_t> meet_table;
  std::vector<std::size_t> join_table;
  std::size_t zero = 0;
  std::size_t one = 0;

  std::size_t size() const { return order.size(); }
  std::size_t meet(std::size_t x, std::size_t y) const {
    return meet_table[x * size() + y];
  }
  std::size_t join(std::size_t x, std::size_t y) const {
    return join_table[x * size() + y];
  }
};

/// Pair with no (unique) greatest lower or least upper bound.
struct NotALattice {
  std::size_t x, y;
  bool missing_meet;  // otherwise the join was missing
};

/// Builds meet/join tables as glb/lub over the order. Checks that zero and
/// one really are the minimum and maximum.
inline std::variant<Lattice, NotALattice> lattice_from_order(const Poset& p,
                                                             std::size_t zero,
                                                             std::size_t one) {
  std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    if (!p.leq(zero, x) || !p.leq(x, one))
      throw std::invalid_argument("zero/one are not the bounds of the order");
  Lattice l;
  l.order = p;
  l.zero = zero;
  l.one = one;
  l.meet_table.assign(n * n, 0);
  l.join_table.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      // greatest lower bound
      std::size_t glb = n;
      for (std::size_t z = 0; z < n; ++z)
        if (p.leq(z, x) && p.leq(z, y) && (glb == n || p.leq(glb, z))) glb = z;
      bool glb_ok = glb != n;
      for (std::size_t z = 0; glb_ok && z < n; ++z)
        if (p.leq(z, x) && p.leq(z, y) && !p.leq(z, glb)) glb_ok = false;
      if (!glb_ok) return NotALattice{x, y, true};
      // least upper bound
      std::size_t lub = n;
      for (std::size_t z = 0; z < n; ++z)
        if (p.leq(x, z) && p.leq(y, z) && (lub == n || p.leq(z, lub))) lub = z;
      bool lub_ok = lub != n;
      for (std::size_t z = 0; lub_ok && z < n; ++z)
        if (p.leq(x, z) && p.leq(y, z) && !p.leq(lub, z)) lub_ok = false;
      if (!lub_ok) return NotALattice{x, y, false};
      l.meet_table[x * n + y] = glb;
      l.join_table[x * n + y] = lub;
    }
  return l;
}

/// The lattice of all downsets of P under inclusion: meet is intersection,
/// join is union. Elements follow the canonical downset order.
inline Lattice downset_lattice(const Poset& p) {
  auto downsets = enumerate_downsets(p);
  std::size_t n = downsets.size();
  Poset order(n);
  Lattice l;
  l.meet_table.assign(n * n, 0);
  l.join_table.assign(n * n, 0);
  auto index_of = [&](const Bitset& d) -> std::size_t {
    for (std::size_t k = 0; k < n; ++k)
      if (downsets[k] == d) return k;
    throw std::logic_error("set is not a downset");
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && downsets[x].subset_of(downsets[y])) order.add_leq(x, y);
    }
  l.order = order;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      l.meet_table[x * n + y] = index_of(downsets[x] & downsets[y]);
      l.join_table[x * n + y] = index_of(downsets[x] | downsets[y]);
    }
  l.zero = index_of(Bitset(p.size()));
  Bitset full(p.size());
  for (std::size_t e = 0; e < p.size(); ++e) full.set(e);
  l.one = index_of(full);
  return l;
}

struct DistributivityWitness {
  std::size_t x, y, z;
};

/// Checks x ^ (y v z) = (x ^ y) v (x ^ z) over all triples.
inline std::optional<DistributivityWitness> distributivity_witness(const Lattice& l) {
  std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return DistributivityWitness{x, y, z};
  return std::nullopt;
}

inline bool is_distributive(const Lattice& l) {
  return !distributivity_witness(l).has_value();
}

struct JoinIrreducibles {
  /// sub-poset on the join-irreducible elements
  Poset poset;
  /// join-irreducible poset element -> lattice element
  std::vector<std::size_t> element;
  /// lattice element -> downset of the join-irreducible poset
  std::vector<Bitset> iso;
};

/// Birkhoff representation: J_L is the sub-poset of non-zero elements with
/// exactly one lower cover, and x |-> { j in J_L : j <= x } is a lattice
/// isomorphism L -> D(J_L) when L is distributive.
inline JoinIrreducibles join_irreducibles(const Lattice& l) {
  JoinIrreducibles out;
  std::size_t n = l.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (x == l.zero) continue;
    std::size_t lower_covers = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (!l.order.lt(y, x)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < n && cover; ++z)
        if (l.order.lt(y, z) && l.order.lt(z, x)) cover = false;
      if (cover) ++lower_covers;
    }
    if (lower_covers == 1) out.element.push_back(x);
  }
  out.poset = l.order.induced(out.element);
  for (std::size_t x = 0; x < n; ++x) {
    Bitset d(out.element.size());
    for (std::size_t k = 0; k < out.element.size(); ++k)
      if (l.order.leq(out.element[k], x)) d.set(k);
    out.iso.push_back(d);
  }
  return out;
}

/// Stacks the given lattices: inside L_i the order is unchanged, and every
/// element of L_i sits below every element of L_j for i < j. Elements are
/// renumbered consecutively.
inline Lattice simple_join(const std::vector<Lattice>& parts) {
  if (parts.empty()) throw std::invalid_argument("simple_join of nothing");
  std::size_t n = 0;
  for (const auto& l : parts) n += l.size();
  Poset order(n);
  std::size_t base = 0;
  std::vector<std::size_t> bases;
  for (const auto& l : parts) {
    bases.push_back(base);
    for (std::size_t x = 0; x < l.size(); ++x)
      for (std::size_t y = 0; y < l.size(); ++y)
        if (l.order.lt(x, y)) order.add_leq(base + x, base + y);
    base += l.size();
  }
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    order.add_leq(bases[i] + parts[i].one, bases[i + 1] + parts[i + 1].zero);
  auto built = lattice_from_order(order, bases[0] + parts[0].zero,
                                  bases.back() + parts.back().one);
  return std::get<Lattice>(built);
}

}  // namespace dlgraph
