#include <doctest.h>

#include "coverdepth/errors.hpp"
#include "coverdepth/graph.hpp"
#include "coverdepth/graph_io.hpp"
#include "oracles.hpp"

using namespace coverdepth;

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(2, 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.neighbors(1) == vertex_bit(0));
  CHECK(g.closed_neighborhood(1) == (vertex_bit(0) | vertex_bit(1)));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK(g.canonical_string() == "n=4;edges=0-1,2-3");
  CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 4), InputError);
  CHECK_THROWS_AS(Graph(65), InputError);

  const Graph h = g.without_vertices(vertex_bit(1));
  CHECK(h.num_vertices() == 4);
  CHECK(h.edges() == std::vector<std::pair<int, int>>{{2, 3}});
}

TEST_CASE("vertex removal re-indexes") {
  const Subgraph s = remove_closed_neighborhood(path_graph(5), 1);
  CHECK(s.graph.num_vertices() == 2);
  CHECK(s.to_parent == std::vector<int>{3, 4});
  CHECK(s.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("ordered matching number on named graphs") {
  CHECK(ordered_matching_number(Graph(3)) == 0);
  CHECK(ordered_matching_number(complete_graph(2)) == 1);
  CHECK(ordered_matching_number(cycle_graph(4)) == 1);
  CHECK(ordered_matching_number(path_graph(4)) == 2);
  CHECK(ordered_matching_number(complete_graph(5)) == 1);
  CHECK(ordered_matching_number(path_graph(6)) == 3);
  CHECK(ordered_matching_number(complete_bipartite_graph(3, 3)) == 1);

  const auto r = max_ordered_matching(path_graph(4));
  CHECK(r.value == 2);
  CHECK(is_ordered_matching(path_graph(4), r.witness));
  // (0,1) then (2,3) breaks the triangular condition: 2 is adjacent to 1.
  CHECK_FALSE(is_ordered_matching(cycle_graph(4), OrderedMatching{{{0, 1}, {2, 3}}}));
  CHECK_THROWS_AS(is_ordered_matching(cycle_graph(4), OrderedMatching{{{0, 7}}}), InputError);
}

TEST_CASE("ordered matching number agrees with sequence search") {
  for (int n = 1; n <= 5; ++n) {
    enumerate_graphs(n, {}, [](const Graph& g) {
      const auto r = max_ordered_matching(g);
      CHECK(r.value == oracle::ordered_matching_number(g));
      CHECK(r.witness.size() == r.value);
      CHECK(is_ordered_matching(g, r.witness));
    });
  }
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    const Graph g = oracle::random_graph(rng, 6, 0.45);
    CHECK(ordered_matching_number(g) == oracle::ordered_matching_number(g));
  }
}

TEST_CASE("matchings and covers agree with brute force") {
  CHECK(min_maximal_matching(cycle_graph(4)) == 2);
  CHECK(min_maximal_matching(path_graph(4)) == 1);
  CHECK(matching_number(path_graph(5)) == 2);
  for (int n = 1; n <= 5; ++n) {
    enumerate_graphs(n, {}, [](const Graph& g) {
      CHECK(min_maximal_matching(g) == oracle::min_maximal_matching(g));
      auto covers = minimal_vertex_covers(g);
      for (VertexSet c : covers) CHECK(is_vertex_cover(g, c));
      std::sort(covers.begin(), covers.end());
      CHECK(covers == oracle::minimal_vertex_covers(g));
      CHECK(matching_number(g) <= 2 * min_maximal_matching(g));
      CHECK(ordered_matching_number(g) <= matching_number(g));
    });
  }
}

TEST_CASE("cover order is by size then members") {
  const auto covers = minimal_vertex_covers(path_graph(4));
  REQUIRE(covers.size() == 3);
  CHECK(covers[0] == (vertex_bit(0) | vertex_bit(2)));
  CHECK(covers[1] == (vertex_bit(1) | vertex_bit(2)));
  CHECK(covers[2] == (vertex_bit(1) | vertex_bit(3)));
}

TEST_CASE("ordered matching lemma holds on small graphs") {
  for (int n = 2; n <= 5; ++n) {
    enumerate_graphs(n, {}, [](const Graph& g) {
      const int nu = ordered_matching_number(g);
      for (int v : set_members(g.non_isolated()))
        CHECK(ordered_matching_number(remove_closed_neighborhood(g, v).graph) <= nu - 1);
    });
  }
}

TEST_CASE("bipartition") {
  const auto p = bipartition(path_graph(4));
  REQUIRE(p);
  CHECK(p->first == (vertex_bit(0) | vertex_bit(2)));
  CHECK(p->second == (vertex_bit(1) | vertex_bit(3)));
  CHECK_FALSE(bipartition(complete_graph(3)));
  CHECK(is_connected(cycle_graph(5)));
  CHECK_FALSE(is_connected(Graph(2)));
  CHECK(is_connected(Graph(1)));

  // Isolated vertices lead their own component and land in the first part.
  Graph g(3);
  g.add_edge(1, 2);
  const auto q = bipartition(g);
  REQUIRE(q);
  CHECK(q->first == (vertex_bit(0) | vertex_bit(1)));
}
