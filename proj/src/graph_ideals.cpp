#include "coverdepth/graph_ideals.hpp"

#include <stdexcept>

#include "coverdepth/errors.hpp"

namespace coverdepth {

GraphIdealContext::GraphIdealContext(Graph g)
    : graph(std::move(g)), ambient_n(static_cast<std::size_t>(graph.num_vertices())) {
  parts = bipartition(graph);
  if (parts) u_full = Monomial::from_set(ambient_n, parts->first);
}

Monomial vertex_product(std::size_t n, VertexSet s) { return Monomial::from_set(n, s); }

MonomialIdeal edge_ideal(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) gens.push_back(Monomial::from_set(n, vertex_bit(u) | vertex_bit(v)));
  return minimalize(n, std::move(gens));
}

MonomialIdeal cover_ideal(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<Monomial> gens;
  for (VertexSet c : minimal_vertex_covers(g)) gens.push_back(Monomial::from_set(n, c));
  return minimalize(n, std::move(gens));
}

MonomialIdeal cover_ideal_by_duality(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  if (g.num_edges() == 0) return MonomialIdeal::unit(n);
  return alexander_dual(edge_ideal(g));
}

MonomialIdeal cover_ideal_checked(const Graph& g) {
  MonomialIdeal by_covers = cover_ideal(g);
  if (!equals(by_covers, cover_ideal_by_duality(g))) {
    throw std::logic_error("cover ideal routes disagree on " + g.canonical_string());
  }
  return by_covers;
}

MonomialIdeal symbolic_power_cover(const Graph& g, int k) {
  if (g.num_edges() == 0) throw DomainError("symbolic power needs at least one edge");
  if (k < 1) throw DomainError("symbolic power exponent must be positive");
  const auto n = static_cast<std::size_t>(g.num_vertices());
  MonomialIdeal out = MonomialIdeal::unit(n);
  for (auto [u, v] : g.edges()) {
    out = intersect(out, power(MonomialIdeal::prime(n, vertex_bit(u) | vertex_bit(v)), k));
  }
  return out;
}

IdealPair lemma22_pair(const Graph& g, int v) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const MonomialIdeal xv = MonomialIdeal::prime(n, vertex_bit(v));
  const Subgraph rest = remove_closed_neighborhood(g, v);
  const MonomialIdeal j_rest = embed(cover_ideal(rest.graph), n, rest.to_parent);
  const Monomial u = vertex_product(n, g.neighbors(v));
  return {sum(cover_ideal(g), xv), sum(multiply(j_rest, u), xv)};
}

IdealPair lemma23_pair(const Graph& g, int v) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const Subgraph rest = remove_vertex(g, v);
  return {colon(cover_ideal(g), Monomial::variable(n, v)),
          embed(cover_ideal(rest.graph), n, rest.to_parent)};
}

bool lemma32_check(const Graph& g, int k) {
  if (k < 1) throw InputError("power must be positive");
  if (g.num_edges() == 0) throw DomainError("lemma check needs at least one edge");
  const GraphIdealContext ctx(g);
  if (!ctx.u_full) throw DomainError("graph is not bipartite");
  const MonomialIdeal j = cover_ideal(g);
  return equals(colon(power(j, k), *ctx.u_full), power(j, k - 1));
}

}  // namespace coverdepth
