#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dlgraph/embed.hpp"
#include "dlgraph/gpa.hpp"
#include "dlgraph/graph.hpp"
#include "dlgraph/lattice.hpp"
#include "dlgraph/poset.hpp"

namespace dlgraph {

struct ParseError : std::runtime_error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what),
        line(line_) {}
};

namespace detail {

/// Non-empty, non-comment lines with their 1-based numbers.
inline std::vector<std::pair<std::size_t, std::string>> logical_lines(
    std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string word;
    if (probe >> word) out.emplace_back(no, line);
  }
  return out;
}

inline std::size_t parse_index(const std::string& tok, std::size_t n,
                               std::size_t line) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a vertex index, got '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError(line, "expected a vertex index, got '" + tok + "'");
  if (v >= n)
    throw ParseError(line, "index " + tok + " out of range (n = " +
                               std::to_string(n) + ")");
  return v;
}

}  // namespace detail

/// `graph <n>` then `edge <u> <v>` lines; `#` starts a comment.
inline ReflexiveGraph parse_graph(std::istream& in) {
  auto lines = detail::logical_lines(in);
  if (lines.empty()) throw ParseError(0, "empty graph file");
  std::istringstream head(lines[0].second);
  std::string kw;
  std::size_t n = 0;
  head >> kw;
  if (kw != "graph" || !(head >> n))
    throw ParseError(lines[0].first, "expected 'graph <n>'");
  ReflexiveGraph g(n);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::istringstream ls(lines[k].second);
    std::string u, v;
    ls >> kw;
    if (kw != "edge" || !(ls >> u >> v))
      throw ParseError(lines[k].first, "expected 'edge <u> <v>'");
    g.add_edge(detail::parse_index(u, n, lines[k].first),
               detail::parse_index(v, n, lines[k].first));
  }
  return g;
}

/// `poset <n>`, `cover <u> <v>` lines, then `arc <u> <v>`, `arcs all`, or
/// `arcs all-loops` lines describing the arc set.
inline std::pair<Poset, ArcSet> parse_poset(std::istream& in) {
  auto lines = detail::logical_lines(in);
  if (lines.empty()) throw ParseError(0, "empty poset file");
  std::istringstream head(lines[0].second);
  std::string kw;
  std::size_t n = 0;
  head >> kw;
  if (kw != "poset" || !(head >> n))
    throw ParseError(lines[0].first, "expected 'poset <n>'");
  Poset p(n);
  ArcSet a(n);
  struct Pending {
    std::size_t x, y, line;
  };
  std::vector<Pending> arcs;
  bool all = false, all_loops = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::istringstream ls(lines[k].second);
    std::string u, v;
    ls >> kw;
    if (kw == "cover") {
      if (!(ls >> u >> v))
        throw ParseError(lines[k].first, "expected 'cover <u> <v>'");
      try {
        p.add_leq(detail::parse_index(u, n, lines[k].first),
                  detail::parse_index(v, n, lines[k].first));
      } catch (const std::invalid_argument& e) {
        throw ParseError(lines[k].first, e.what());
      }
    } else if (kw == "arc") {
      if (!(ls >> u >> v))
        throw ParseError(lines[k].first, "expected 'arc <u> <v>'");
      arcs.push_back({detail::parse_index(u, n, lines[k].first),
                      detail::parse_index(v, n, lines[k].first),
                      lines[k].first});
    } else if (kw == "arcs") {
      if (!(ls >> u) || (u != "all" && u != "all-loops"))
        throw ParseError(lines[k].first, "expected 'arcs all' or 'arcs all-loops'");
      (u == "all" ? all : all_loops) = true;
    } else {
      throw ParseError(lines[k].first, "unknown directive '" + kw + "'");
    }
  }
  if (all) a = ArcSet::all_arcs(p);
  if (all_loops) a.add_all_loops();
  for (auto [x, y, line] : arcs) {
    if (!p.leq(x, y))
      throw ParseError(line, "arc endpoints are not comparable in the poset");
    a.add(x, y);
  }
  return {p, a};
}

/// `chain <e1> <e2> ...` lines.
inline ChainCover parse_chain_cover(std::istream& in, const Poset& p) {
  ChainCover cover;
  for (auto& [no, text] : detail::logical_lines(in)) {
    std::istringstream ls(text);
    std::string kw;
    ls >> kw;
    if (kw != "chain") throw ParseError(no, "expected 'chain <e...>'");
    std::vector<std::size_t> chain;
    std::string tok;
    while (ls >> tok) chain.push_back(detail::parse_index(tok, p.size(), no));
    if (chain.empty()) throw ParseError(no, "empty chain");
    cover.chains.push_back(std::move(chain));
  }
  if (!valid_chain_cover(p, cover))
    throw ParseError(0, "chains do not form a valid cover of the poset");
  return cover;
}

inline void emit_graph(std::ostream& out, const ReflexiveGraph& g) {
  out << "graph " << g.size() << "\n";
  for (auto [u, v] : g.edges()) out << "edge " << u << " " << v << "\n";
}

inline void emit_poset(std::ostream& out, const Poset& p, const ArcSet& a) {
  out << "poset " << p.size() << "\n";
  for (auto [u, v] : p.covers()) out << "cover " << u << " " << v << "\n";
  for (auto [x, y] : a.arcs()) out << "arc " << x << " " << y << "\n";
}

/// Graph edges thin and dark; when a lattice is given its covers are drawn
/// as thick light edges over the same vertices.
inline void emit_dot(std::ostream& out, const ReflexiveGraph& g,
                     const Lattice* lattice = nullptr) {
  out << "graph G {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.size(); ++v) out << "  " << v << ";\n";
  std::vector<std::pair<std::size_t, std::size_t>> hasse;
  if (lattice) hasse = lattice->order.covers();
  auto is_cover = [&](std::size_t u, std::size_t v) {
    for (auto [x, y] : hasse)
      if ((x == u && y == v) || (x == v && y == u)) return true;
    return false;
  };
  for (auto [u, v] : g.edges())
    if (!lattice || !is_cover(u, v))
      out << "  " << u << " -- " << v << " [color=black];\n";
  for (auto [x, y] : hasse) {
    out << "  " << x << " -- " << y
        << " [penwidth=3, color=gray70";
    if (!g.adjacent(x, y)) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
}

inline nlohmann::json lattice_to_json(const Lattice& l) {
  nlohmann::json j;
  j["n"] = l.size();
  j["zero"] = l.zero;
  j["one"] = l.one;
  auto covers = nlohmann::json::array();
  for (auto [x, y] : l.order.covers()) covers.push_back({x, y});
  j["covers"] = covers;
  return j;
}

inline nlohmann::json embedding_to_json(const EmbeddingResult& emb) {
  nlohmann::json j;
  j["chains"] = emb.cover.chains;
  j["sizes"] = emb.product.sizes;
  auto coords = nlohmann::json::array();
  for (std::size_t v = 0; v < emb.coords.size(); ++v)
    coords.push_back({{"vertex", v}, {"tuple", emb.coords[v]}});
  j["coordinates"] = coords;
  auto vi = nlohmann::json::array();
  for (const auto& r : emb.removed_vertices)
    vi.push_back({{"alpha", r.alpha}, {"i", r.i}, {"beta", r.beta}, {"j", r.j}});
  j["removed_vertex_intervals"] = vi;
  auto eb = nlohmann::json::array();
  for (const auto& r : emb.removed_edges)
    eb.push_back({{"alpha", r.alpha}, {"i", r.i}, {"beta", r.beta}, {"j", r.j}});
  j["removed_edge_blocks"] = eb;
  j["tight"] = emb.tight;
  j["induced"] = emb.induced;
  j["nontight_cover_count"] = emb.nontight_cover_count;
  auto factors = nlohmann::json::array();
  for (const auto& f : emb.factors) {
    auto edges = nlohmann::json::array();
    for (auto [u, v] : f.edges()) edges.push_back({u, v});
    factors.push_back({{"n", f.size()}, {"edges", edges}});
  }
  j["factors"] = factors;
  return j;
}

}  // namespace dlgraph
