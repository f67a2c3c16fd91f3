#pragma once

#include <optional>
#include <utility>

#include "coverdepth/graph.hpp"
#include "coverdepth/monomial.hpp"

namespace coverdepth {

/// A graph with its ambient ring data: one variable per vertex and, for
/// bipartite graphs, the product of the first-part variables.
struct GraphIdealContext {
  Graph graph;
  std::size_t ambient_n = 0;
  std::optional<Bipartition> parts;
  std::optional<Monomial> u_full;

  explicit GraphIdealContext(Graph g);
};

MonomialIdeal edge_ideal(const Graph& g);

/// Cover ideal from the minimal vertex covers; an edgeless graph gives (1).
MonomialIdeal cover_ideal(const Graph& g);
/// Cover ideal as the Alexander dual of the edge ideal.
MonomialIdeal cover_ideal_by_duality(const Graph& g);
/// Both routes, throwing std::logic_error if they disagree.
MonomialIdeal cover_ideal_checked(const Graph& g);

/// Intersection of the k-th powers of the edge primes.
/// Throws DomainError for an edgeless graph or k < 1.
MonomialIdeal symbolic_power_cover(const Graph& g, int k);

/// Product of the variables in `s` over `n` variables.
Monomial vertex_product(std::size_t n, VertexSet s);

struct IdealPair {
  MonomialIdeal left;
  MonomialIdeal right;

  bool holds() const { return equals(left, right); }
};

/// left = J(G) + (x_v); right = u J(G \ N[v]) S + (x_v) with u the product of
/// the neighbours of v.
IdealPair lemma22_pair(const Graph& g, int v);

/// left = (J(G) : x_v); right = J(G \ v) re-embedded in the ambient of G.
IdealPair lemma23_pair(const Graph& g, int v);

/// (J^k : u) == J^(k-1) for u the product of the first bipartition part.
/// Throws DomainError for non-bipartite or edgeless graphs.
bool lemma32_check(const Graph& g, int k);

}  // namespace coverdepth
