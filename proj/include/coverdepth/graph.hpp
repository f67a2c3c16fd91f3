#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coverdepth {

/// Vertex subsets are bit masks; graphs are limited to 64 vertices.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }
inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1U; }

/// Indices of the members of `s`, ascending.
std::vector<int> set_members(VertexSet s);

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const;

  /// Rejects self-loops and out-of-range endpoints; duplicate edges are no-ops.
  void add_edge(int u, int v);

  bool adjacent(int u, int v) const;
  VertexSet neighbors(int v) const;
  VertexSet closed_neighborhood(int v) const { return neighbors(v) | vertex_bit(v); }
  /// Union of the open neighborhoods of the members of `s`.
  VertexSet neighbors_of_set(VertexSet s) const;
  bool is_isolated(int v) const { return neighbors(v) == 0; }
  VertexSet all_vertices() const;
  VertexSet non_isolated() const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Same vertex indices; every edge meeting `removed` is dropped.
  Graph without_vertices(VertexSet removed) const;

  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// `n=4;edges=0-1,1-2` form; stable and used as a cache key.
  std::string canonical_string() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

/// A re-indexed graph together with the original index of each new vertex.
struct Subgraph {
  Graph graph;
  std::vector<int> to_parent;
};

/// G \ A: vertices outside `removed`, re-indexed in increasing order.
Subgraph remove_vertices(const Graph& g, VertexSet removed);
Subgraph remove_closed_neighborhood(const Graph& g, int v);
Subgraph remove_vertex(const Graph& g, int v);

/// Pairs (a_i, b_i) in order; a_i b_i is an edge of the host graph.
struct OrderedMatching {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
};

/// Checks the matching, independence, and triangular conditions against `g`.
/// Throws InputError when an index is out of range.
bool is_ordered_matching(const Graph& g, const OrderedMatching& m);

/// Maximum ordered matching together with a lowest-index witness.
/// Edgeless graphs give 0 and an empty witness.
struct OrderedMatchingResult {
  int value = 0;
  OrderedMatching witness;
};

OrderedMatchingResult max_ordered_matching(const Graph& g);
int ordered_matching_number(const Graph& g);

/// Maximum matching size (plain matching number).
int matching_number(const Graph& g);

/// Minimum size of an inclusion-maximal matching.
int min_maximal_matching(const Graph& g);

/// Two-coloring with the lowest vertex of each component in the first part.
struct Bipartition {
  VertexSet first = 0;
  VertexSet second = 0;
};

std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_connected(const Graph& g);

/// All inclusion-minimal vertex covers, sorted by size then lexicographically
/// by member list.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);

bool is_vertex_cover(const Graph& g, VertexSet c);

// Named families used by the examples and verification suites.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

}  // namespace coverdepth
