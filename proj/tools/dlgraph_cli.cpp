/// Command-line front end: construct G(P,A), recognize DL-graphs, verify
/// compatibility, embed into products of proper interval graphs, reduce to
/// R-thin quotients, and run the brute-force oracle.
///
/// Exit codes: 0 success/YES, 1 NO/fail, 3 INCONCLUSIVE, 2 input error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dlgraph/compat.hpp"
#include "dlgraph/embed.hpp"
#include "dlgraph/gpa.hpp"
#include "dlgraph/graph.hpp"
#include "dlgraph/io.hpp"
#include "dlgraph/lattice.hpp"
#include "dlgraph/oracle.hpp"
#include "dlgraph/poset.hpp"
#include "dlgraph/recognize.hpp"

namespace {

using json = nlohmann::json;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dlgraph::ReflexiveGraph read_graph(const std::string& path) {
  std::istringstream in(slurp(path));
  return dlgraph::parse_graph(in);
}

std::pair<dlgraph::Poset, dlgraph::ArcSet> read_poset(const std::string& path) {
  std::istringstream in(slurp(path));
  return dlgraph::parse_poset(in);
}

/// Random valid chain cover: walk a random linear extension, appending each
/// element to a random compatible chain or opening a new one.
dlgraph::ChainCover random_cover(const dlgraph::Poset& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.down(a).count() < p.down(b).count();
  });
  dlgraph::ChainCover cover;
  for (auto v : order) {
    std::vector<std::size_t> fits;
    for (std::size_t c = 0; c < cover.chains.size(); ++c)
      if (p.lt(cover.chains[c].back(), v)) fits.push_back(c);
    if (!fits.empty() && rng() % 2 == 0) {
      cover.chains[fits[rng() % fits.size()]].push_back(v);
    } else {
      cover.chains.push_back({v});
    }
  }
  return cover;
}

int cmd_construct(const std::string& in_path, bool dot) {
  auto [p, a] = read_poset(in_path);
  auto g = dlgraph::construct_gpa(p, a);
  if (dot)
    dlgraph::emit_dot(std::cout, g);
  else
    dlgraph::emit_graph(std::cout, g);
  return 0;
}

int cmd_recognize(const std::string& in_path, bool prune) {
  auto g = read_graph(in_path);
  auto res = dlgraph::recognize_driver(g, prune);
  json out;
  using V = dlgraph::RecognitionResult::Verdict;
  out["verdict"] = res.verdict == V::yes ? "yes"
                   : res.verdict == V::no ? "no"
                                          : "inconclusive";
  if (!res.reason.empty()) out["reason"] = res.reason;
  if (res.lattice) out["lattice"] = dlgraph::lattice_to_json(*res.lattice);
  std::cout << out.dump(2) << "\n";
  return res.verdict == V::yes ? 0 : res.verdict == V::no ? 1 : 3;
}

int cmd_verify(const std::string& in_path) {
  auto [p, a] = read_poset(in_path);
  auto g = dlgraph::construct_gpa(p, a);
  auto l = dlgraph::downset_lattice(p);
  json out;
  auto witness = dlgraph::compatibility_witness(g, l);
  out["compatible"] = !witness.has_value();
  if (witness)
    out["witness"] = {{"u", witness->u},
                      {"u2", witness->u2},
                      {"v", witness->v},
                      {"v2", witness->v2},
                      {"failed", witness->meet_failed ? "meet" : "join"}};
  auto ids = dlgraph::check_identities(g, l);
  out["min_max_identity"] = ids.min_max_holds;
  out["vee_identity"] = ids.vee_holds;
  out["hasse_subgraph"] = dlgraph::check_hasse_subgraph(g, l);
  out["majority_is_polymorphism"] =
      dlgraph::is_ternary_polymorphism(g, dlgraph::majority_from_lattice(l));
  std::cout << out.dump(2) << "\n";
  return witness ? 1 : 0;
}

int cmd_embed(const std::string& in_path, const std::string& cover_mode,
              std::uint64_t seed, bool tighten, bool keep_empty) {
  auto [p, a] = read_poset(in_path);
  dlgraph::ArcSet norm = dlgraph::normalize_arcs(p, a);
  dlgraph::ChainCover cover;
  if (cover_mode == "auto" || cover_mode == "induced") {
    cover = dlgraph::induced_cover(p, dlgraph::reduced_complement(p, norm));
  } else if (cover_mode == "decomposition") {
    cover = dlgraph::greedy_chain_decomposition(p);
  } else if (cover_mode == "random") {
    cover = random_cover(p, seed);
  } else {
    std::istringstream in(slurp(cover_mode));
    cover = dlgraph::parse_chain_cover(in, p);
  }
  auto emb = dlgraph::build_embedding(p, a, cover, !keep_empty);
  if (tighten) {
    auto g = dlgraph::construct_gpa(p, a);
    if (emb.induced) emb = dlgraph::tighten_factors(emb, g);
  }
  std::cout << dlgraph::embedding_to_json(emb).dump(2) << "\n";
  return 0;
}

int cmd_reduce(const std::string& in_path) {
  auto g = read_graph(in_path);
  auto red = dlgraph::r_thin_reduction(g);
  for (std::size_t v = 0; v < g.size(); ++v)
    std::cout << "# vertex " << v << " -> class " << red.cls[v] << "\n";
  dlgraph::emit_graph(std::cout, red.quotient);
  return 0;
}

int cmd_oracle(const std::string& in_path, std::size_t max_n,
               bool distributive_only, bool prune) {
  auto g = read_graph(in_path);
  if (g.size() > max_n)
    throw std::runtime_error("graph exceeds --max-n = " + std::to_string(max_n));
  auto lattices = dlgraph::oracle_recognize(g, distributive_only, prune);
  json out = json::array();
  for (const auto& l : lattices) out.push_back(dlgraph::lattice_to_json(l));
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distributive-lattice polymorphisms on reflexive graphs"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker count (reserved; single process)")
      ->check(CLI::PositiveNumber);

  std::string in_path, cover_mode = "auto";
  bool dot = false, no_prune = false, tighten = false, keep_empty = false;
  bool distributive_only = false;
  std::uint64_t seed = 0;
  std::size_t max_n = 6;

  auto* construct = app.add_subcommand("construct", "build G(P,A) from a poset file");
  construct->add_option("input", in_path, "poset file ('-' for stdin)")->required();
  construct->add_flag("--dot", dot, "emit DOT instead of graph text");

  auto* recognize = app.add_subcommand("recognize", "decide whether a graph is a DL-graph");
  recognize->add_option("input", in_path, "graph file ('-' for stdin)")->required();
  recognize->add_flag("--no-prune", no_prune, "disable (0,1) candidate pruning");

  auto* verify = app.add_subcommand("verify", "check D(P) compatibility of G(P,A)");
  verify->add_option("input", in_path, "poset file ('-' for stdin)")->required();

  auto* embed = app.add_subcommand("embed", "embed G(P,A) into a product of chains");
  embed->add_option("input", in_path, "poset file ('-' for stdin)")->required();
  embed->add_option("--cover", cover_mode,
                    "auto|induced|decomposition|random|<chain file>");
  embed->add_option("--seed", seed, "seed for --cover random");
  embed->add_flag("--tighten", tighten, "contract factors to R-thin form");
  embed->add_flag("--keep-empty", keep_empty, "keep empty same-chain vertex intervals");

  auto* reduce = app.add_subcommand("reduce", "R-thin reduction of a graph");
  reduce->add_option("input", in_path, "graph file ('-' for stdin)")->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustively list compatible lattices");
  oracle->add_option("input", in_path, "graph file ('-' for stdin)")->required();
  oracle->add_option("--max-n", max_n, "size guard (hard cap 6)")->check(CLI::Range(1, 6));
  oracle->add_flag("--distributive-only", distributive_only);
  oracle->add_flag("--no-prune", no_prune, "disable Hasse-subgraph pruning");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return cmd_construct(in_path, dot);
    if (recognize->parsed()) return cmd_recognize(in_path, !no_prune);
    if (verify->parsed()) return cmd_verify(in_path);
    if (embed->parsed())
      return cmd_embed(in_path, cover_mode, seed, tighten, keep_empty);
    if (reduce->parsed()) return cmd_reduce(in_path);
    if (oracle->parsed())
      return cmd_oracle(in_path, max_n, distributive_only, !no_prune);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
