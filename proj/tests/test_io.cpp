#include <doctest.h>

#include <fstream>
#include <sstream>

#include "coverdepth/errors.hpp"
#include "coverdepth/graph_ideals.hpp"
#include "coverdepth/graph_io.hpp"
#include "coverdepth/serialize.hpp"
#include "oracles.hpp"

using namespace coverdepth;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("graph text formats") {
  CHECK(parse_graph("n=2;edges=0-1") == complete_graph(2));
  CHECK(parse_graph("n=4;edges=0-1,1-2,2-3,3-0") == cycle_graph(4));
  CHECK(parse_graph("  n=3  ") == Graph(3));
  CHECK(parse_graph("n=3;edges=0-1,1-0").num_edges() == 1);
  CHECK(parse_graph("# path\nn 3\ne 0 1\n\ne 1 2  # second edge\n") == path_graph(3));
  CHECK_THROWS_AS(parse_graph("n=3;edges=0-0"), InputError);
  CHECK_THROWS_AS(parse_graph("n 2\ne 1 1"), InputError);

  try {
    parse_graph("n 3\ne 0 1\ne 0 x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
  try {
    parse_graph("n=3;edges=0-1,1-7");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 17);
  }
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("e 0 1"), ParseError);
  CHECK_THROWS_AS(parse_graph("n=2;edges=0-1\nn=2"), ParseError);
  CHECK_THROWS_AS(parse_graph("n 65"), ParseError);
}

TEST_CASE("graph6 strings match the reference encoder") {
  // Reference strings produced by networkx.
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(path_graph(4)) == "Ch");
  CHECK(to_graph6(cycle_graph(4)) == "Cl");
  CHECK(to_graph6(complete_graph(5)) == "D~{");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(path_graph(7)) == "FhCGG");
  CHECK(parse_graph("Cl") == cycle_graph(4));
  CHECK(parse_graph(">>graph6<<FhCGG\n") == path_graph(7));
  CHECK_THROWS_AS(parse_graph6("Cll"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C\x01"), ParseError);
}

TEST_CASE("graph6 long form for 63 vertices") {
  const Graph from_g6 = parse_graph(slurp(COVERDEPTH_TEST_DATA "/g63.g6"));
  const Graph from_edges = parse_graph(slurp(COVERDEPTH_TEST_DATA "/g63.edges"));
  CHECK(from_g6.num_vertices() == 63);
  CHECK(from_g6.num_edges() == 193);
  CHECK(from_g6 == from_edges);
  std::string text = slurp(COVERDEPTH_TEST_DATA "/g63.g6");
  text = text.substr(10);
  while (!text.empty() && text.back() == '\n') text.pop_back();
  CHECK(to_graph6(from_g6) == text);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(rng() % 65);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("enumeration") {
  EnumerationFilter one_edge;
  one_edge.min_edges = 1;
  CHECK(enumerate_graphs(3, one_edge, [](const Graph&) {}) == 7);
  CHECK(enumerate_graphs(2, one_edge, [](const Graph&) {}) == 1);
  CHECK(enumerate_graphs(4, {}, [](const Graph&) {}) == 64);
  CHECK_THROWS_AS(enumerate_graphs(7, {}, [](const Graph&) {}), InputError);

  for (int n = 1; n <= 5; ++n) {
    EnumerationFilter bip = one_edge;
    bip.bipartite_only = true;
    std::uint64_t expected = 0;
    enumerate_graphs(n, one_edge, [&](const Graph& g) { expected += oracle::bipartite_by_colorings(g); });
    CHECK(enumerate_graphs(n, bip, [](const Graph& g) { CHECK(oracle::bipartite_by_colorings(g)); }) == expected);
  }

  // Connected labeled graphs on 4 vertices: 38.
  EnumerationFilter conn;
  conn.connected_only = true;
  CHECK(enumerate_graphs(4, conn, [](const Graph&) {}) == 38);

  const auto first = all_graphs(3, one_edge);
  CHECK(first.front().canonical_string() == "n=3;edges=0-1");
}

TEST_CASE("JSON round trips") {
  const MonomialIdeal j = cover_ideal(cycle_graph(4));
  const json ij = to_json(j);
  CHECK(ij["text"] == "(x2*x4, x1*x3)");
  CHECK(equals(ideal_from_json(ij), j));

  const auto d = construct_cover(cycle_graph(4), ModuleKind::Quotient);
  const json dj = to_json(d);
  CHECK(dj["module"]["kind"] == "quotient");
  const auto back = decomposition_from_json(json::parse(dj.dump()));
  CHECK(back.sorted_spaces() == d.sorted_spaces());
  CHECK(back.provenance() == d.provenance());
  CHECK(verify_decomposition(back).ok);

  const json bj = to_json(betti_table(edge_ideal(cycle_graph(4))));
  CHECK(bj["totals"] == json::array({4, 4, 1}));
  CHECK(bj["pd"] == 2);

  const CharacteristicPoset poset(j, ModuleKind::Ideal);
  const auto r = sdepth_exact(j, ModuleKind::Ideal);
  const json sj = to_json(r, poset);
  CHECK(sj["exact"] == true);
  REQUIRE(sj.contains("witness"));
  const IntervalPartition p = partition_from_json(sj["witness"]);
  CHECK(check_partition(poset, p, r.lower).ok);

  CHECK_THROWS_AS(monomial_from_json(json::parse("[1, -2]")), InputError);
  CHECK_THROWS_AS(decomposition_from_json(json::parse(R"({"module":{"kind":"ring"}})")), InputError);
  CHECK_THROWS_AS(partition_from_json(json::parse(R"({"intervals":[[[1]]]})")), InputError);
}
