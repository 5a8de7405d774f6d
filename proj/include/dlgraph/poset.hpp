#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dlgraph/bitset.hpp"

namespace dlgraph {

/// Finite partial order on elements 0..n-1. Stored as principal down-sets:
/// below[x] = { y : y <= x }, which makes leq a single bit test and keeps
/// reflexivity and transitivity structural.
class Poset {
 public:
  Poset() = default;

  explicit Poset(std::size_t n) : n_(n), below_(n, Bitset(n)) {
    for (std::size_t x = 0; x < n; ++x) below_[x].set(x);
  }

  std::size_t size() const { return n_; }

  bool leq(std::size_t x, std::size_t y) const { return below_[y].test(x); }
  bool lt(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  /// Principal downset of x (includes x).
  const Bitset& down(std::size_t x) const { return below_[x]; }

  /// Principal upset of x (includes x).
  Bitset up(std::size_t x) const {
    Bitset u(n_);
    for (std::size_t y = 0; y < n_; ++y)
      if (leq(x, y)) u.set(y);
    return u;
  }

  /// Declares x <= y and closes transitively. Throws on a cycle.
  void add_leq(std::size_t x, std::size_t y) {
    if (x >= n_ || y >= n_) throw std::out_of_range("poset element out of range");
    if (x == y) return;
    if (leq(y, x)) throw std::invalid_argument("cover cycle: antisymmetry violated");
    // everything below x goes below everything above y
    for (std::size_t z = 0; z < n_; ++z)
      if (leq(y, z)) below_[z] |= below_[x];
  }

  /// Cover pairs (x, y) with x strictly below y and nothing between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        if (!lt(x, y)) continue;
        bool cover = true;
        for (std::size_t z = 0; z < n_ && cover; ++z)
          if (lt(x, z) && lt(z, y)) cover = false;
        if (cover) out.emplace_back(x, y);
      }
    return out;
  }

  /// Ordered comparabilities (x, y) with x <= y, loops included.
  std::vector<std::pair<std::size_t, std::size_t>> comparabilities() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t y = 0; y < n_; ++y)
      for (std::size_t x = 0; x < n_; ++x)
        if (leq(x, y)) out.emplace_back(x, y);
    return out;
  }

  bool is_downset(const Bitset& s) const {
    for (std::size_t y = 0; y < n_; ++y)
      if (s.test(y) && !below_[y].subset_of(s)) return false;
    return true;
  }

  /// Downward closure of a set.
  Bitset down_closure(const Bitset& s) const {
    Bitset d(n_);
    for (std::size_t y = 0; y < n_; ++y)
      if (s.test(y)) d |= below_[y];
    return d;
  }

  /// Sub-poset induced on the given elements; element k of the result is
  /// verts[k].
  Poset induced(const std::vector<std::size_t>& verts) const {
    Poset p(verts.size());
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = 0; b < verts.size(); ++b)
        if (lt(verts[a], verts[b])) p.below_[b].set(a);
    return p;
  }

  bool operator==(const Poset& o) const { return n_ == o.n_ && below_ == o.below_; }
  bool operator!=(const Poset& o) const { return !(*this == o); }

 private:
  std::size_t n_ = 0;
  std::vector<Bitset> below_;
};

inline Poset poset_from_covers(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  Poset p(n);
  for (auto [x, y] : covers) p.add_leq(x, y);
  return p;
}

/// All downsets in the canonical order: by cardinality, then by bit pattern.
/// This order fixes the vertex numbering of every graph built on D(P).
inline std::vector<Bitset> enumerate_downsets(const Poset& p) {
  std::vector<Bitset> out{Bitset(p.size())};
  // Grow each downset by one new maximal element. A downset is accepted only
  // from the parent lacking its largest maximal element, so each appears once.
  for (std::size_t i = 0; i < out.size(); ++i) {
    Bitset d = out[i];
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (d.test(y)) continue;
      Bitset e = d | p.down(y);
      if (e.count() != d.count() + 1) continue;  // y's strict downset in d
      bool canonical = true;
      for (std::size_t z = y + 1; z < p.size() && canonical; ++z) {
        if (!e.test(z)) continue;
        bool maximal = true;
        for (std::size_t w = 0; w < p.size() && maximal; ++w)
          if (e.test(w) && p.lt(z, w)) maximal = false;
        if (maximal) canonical = false;
      }
      if (canonical) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.pattern_less(b);
  });
  return out;
}

/// Chains covering every element of a poset; an element may sit in several
/// chains. chains[i][alpha-1] is the element labelled c^alpha_i.
struct ChainCover {
  std::vector<std::vector<std::size_t>> chains;

  bool disjoint() const {
    std::vector<bool> seen;
    for (const auto& c : chains)
      for (auto x : c) {
        if (x >= seen.size()) seen.resize(x + 1, false);
        if (seen[x]) return false;
        seen[x] = true;
      }
    return true;
  }
};

inline bool valid_chain_cover(const Poset& p, const ChainCover& cover) {
  Bitset covered(p.size());
  for (const auto& c : cover.chains) {
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
      if (!p.lt(c[k], c[k + 1])) return false;
    for (auto x : c) {
      if (x >= p.size()) return false;
      covered.set(x);
    }
  }
  return covered.count() == p.size();
}

/// One two-element chain per non-loop arc, singleton chains for the rest.
inline ChainCover chain_cover_from_digraph(
    const Poset& p, const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  ChainCover cover;
  Bitset touched(p.size());
  for (auto [x, y] : arcs) {
    if (!p.lt(x, y)) throw std::invalid_argument("arc is not a strict comparability");
    cover.chains.push_back({x, y});
    touched.set(x);
    touched.set(y);
  }
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!touched.test(x)) cover.chains.push_back({x});
  return cover;
}

/// Disjoint chains partitioning P, peeling a longest chain of the remainder
/// each time. Tight by construction, not necessarily of Dilworth width.
inline ChainCover greedy_chain_decomposition(const Poset& p) {
  ChainCover cover;
  Bitset used(p.size());
  // a linear extension, so the longest-chain DP sees predecessors first
  std::vector<std::size_t> ext(p.size());
  std::iota(ext.begin(), ext.end(), 0);
  std::sort(ext.begin(), ext.end(), [&](std::size_t a, std::size_t b) {
    auto ca = p.down(a).count(), cb = p.down(b).count();
    return ca != cb ? ca < cb : a < b;
  });
  while (used.count() < p.size()) {
    std::vector<std::size_t> len(p.size(), 0), pred(p.size(), p.size());
    std::size_t best = p.size();
    for (auto y : ext) {
      if (used.test(y)) continue;
      len[y] = 1;
      for (std::size_t x = 0; x < p.size(); ++x)
        if (!used.test(x) && p.lt(x, y) && len[x] + 1 > len[y]) {
          len[y] = len[x] + 1;
          pred[y] = x;
        }
      if (best == p.size() || len[y] > len[best]) best = y;
    }
    std::vector<std::size_t> chain;
    for (std::size_t v = best; v != p.size(); v = pred[v]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    for (auto v : chain) used.set(v);
    cover.chains.push_back(std::move(chain));
  }
  return cover;
}

}  // namespace dlgraph
