#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "coverdepth/graph.hpp"

namespace coverdepth {

/// Accepts three formats, detected from the first meaningful line:
///   edge list  `n 4` then `e 0 1` per edge (`#` starts a comment)
///   compact    `n=4;edges=0-1,1-2,2-3`
///   graph6     one line, optionally after a `>>graph6<<` header
/// Duplicate edges collapse. Malformed text throws ParseError; self-loops
/// throw InputError.
Graph parse_graph(std::string_view text);

Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

struct EnumerationFilter {
  bool bipartite_only = false;
  bool connected_only = false;
  int min_edges = 0;
};

inline constexpr int kDefaultMaxEnumeration = 6;

/// Every labeled graph on n vertices passing `filter`, in increasing order
/// of the edge-subset mask over lexicographically ordered vertex pairs.
/// Returns the number of graphs visited. Throws InputError if n > max_n.
std::uint64_t enumerate_graphs(int n, const EnumerationFilter& filter,
                               const std::function<void(const Graph&)>& visit,
                               int max_n = kDefaultMaxEnumeration);

std::vector<Graph> all_graphs(int n, const EnumerationFilter& filter,
                              int max_n = kDefaultMaxEnumeration);

}  // namespace coverdepth
