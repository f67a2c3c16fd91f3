#include "coverdepth/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "coverdepth/errors.hpp"

namespace coverdepth {

std::vector<int> set_members(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count must be in [0, 64], got " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for a graph on " +
                     std::to_string(n_) + " vertices");
  }
}

int Graph::num_edges() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += set_size(row);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  adj_[u] |= vertex_bit(v);
  adj_[v] |= vertex_bit(u);
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return set_contains(adj_[u], v);
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

VertexSet Graph::neighbors_of_set(VertexSet s) const {
  VertexSet out = 0;
  for (int v : set_members(s)) out |= adj_[v];
  return out;
}

VertexSet Graph::all_vertices() const {
  return n_ == 64 ? ~VertexSet{0} : (vertex_bit(n_) - 1);
}

VertexSet Graph::non_isolated() const {
  VertexSet out = 0;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != 0) out |= vertex_bit(v);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : set_members(adj_[u]))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::without_vertices(VertexSet removed) const {
  Graph h(n_);
  for (int u = 0; u < n_; ++u)
    if (!set_contains(removed, u)) h.adj_[u] = adj_[u] & ~removed;
  h.labels_ = labels_;
  return h;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
    throw InputError("label count does not match vertex count");
  }
  labels_ = std::move(labels);
}

std::string Graph::canonical_string() const {
  std::ostringstream os;
  os << "n=" << n_ << ";edges=";
  bool first = true;
  for (auto [u, v] : edges()) {
    if (!first) os << ',';
    first = false;
    os << u << '-' << v;
  }
  return os.str();
}

Subgraph remove_vertices(const Graph& g, VertexSet removed) {
  Subgraph out;
  std::vector<int> to_child(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (set_contains(removed, v)) continue;
    to_child[v] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  out.graph = Graph(static_cast<int>(out.to_parent.size()));
  for (auto [u, v] : g.edges())
    if (to_child[u] >= 0 && to_child[v] >= 0) out.graph.add_edge(to_child[u], to_child[v]);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (int p : out.to_parent) labels.push_back(g.labels()[p]);
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

Subgraph remove_closed_neighborhood(const Graph& g, int v) {
  return remove_vertices(g, g.closed_neighborhood(v));
}

Subgraph remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.num_vertices()) throw InputError("vertex out of range");
  return remove_vertices(g, vertex_bit(v));
}

bool is_ordered_matching(const Graph& g, const OrderedMatching& m) {
  const int n = g.num_vertices();
  for (auto [a, b] : m.pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw InputError("ordered matching refers to a vertex outside the graph");
    }
  }
  VertexSet used = 0;
  for (auto [a, b] : m.pairs) {
    if (a == b || !g.adjacent(a, b)) return false;
    if (set_contains(used, a) || set_contains(used, b)) return false;
    used |= vertex_bit(a) | vertex_bit(b);
  }
  const int r = m.size();
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      const int ai = m.pairs[i].first;
      if (i != j && g.adjacent(ai, m.pairs[j].first)) return false;
      if (g.adjacent(ai, m.pairs[j].second) && i > j) return false;
    }
  }
  return true;
}

namespace {

// Appending (a, b) to an ordered matching whose vertices are `used` is legal
// exactly when a avoids used ∪ N(used) and b is an unused neighbour of a, so
// the best extension depends on `used` alone.
class OrderedMatchingSearch {
 public:
  explicit OrderedMatchingSearch(const Graph& g) : g_(g) {}

  int best(VertexSet used) {
    if (auto it = memo_.find(used); it != memo_.end()) return it->second;
    const VertexSet blocked = used | g_.neighbors_of_set(used);
    int value = 0;
    for (int a : set_members(g_.non_isolated() & ~blocked)) {
      for (int b : set_members(g_.neighbors(a) & ~used)) {
        value = std::max(value, 1 + best(used | vertex_bit(a) | vertex_bit(b)));
      }
    }
    memo_.emplace(used, value);
    return value;
  }

  OrderedMatching witness() {
    OrderedMatching m;
    VertexSet used = 0;
    int remaining = best(0);
    while (remaining > 0) {
      const VertexSet blocked = used | g_.neighbors_of_set(used);
      bool advanced = false;
      for (int a : set_members(g_.non_isolated() & ~blocked)) {
        for (int b : set_members(g_.neighbors(a) & ~used)) {
          const VertexSet next = used | vertex_bit(a) | vertex_bit(b);
          if (1 + best(next) == remaining) {
            m.pairs.emplace_back(a, b);
            used = next;
            --remaining;
            advanced = true;
            break;
          }
        }
        if (advanced) break;
      }
    }
    return m;
  }

 private:
  const Graph& g_;
  std::unordered_map<VertexSet, int> memo_;
};

}  // namespace

OrderedMatchingResult max_ordered_matching(const Graph& g) {
  OrderedMatchingSearch search(g);
  OrderedMatchingResult out;
  out.value = search.best(0);
  out.witness = search.witness();
  return out;
}

int ordered_matching_number(const Graph& g) { return max_ordered_matching(g).value; }

int matching_number(const Graph& g) {
  std::unordered_map<VertexSet, int> memo;
  auto rec = [&](auto&& self, VertexSet avail) -> int {
    VertexSet live = 0;
    for (int v : set_members(avail))
      if ((g.neighbors(v) & avail) != 0) live |= vertex_bit(v);
    if (live == 0) return 0;
    if (auto it = memo.find(live); it != memo.end()) return it->second;
    const int v = std::countr_zero(live);
    int value = self(self, live & ~vertex_bit(v));
    for (int w : set_members(g.neighbors(v) & live))
      value = std::max(value, 1 + self(self, live & ~vertex_bit(v) & ~vertex_bit(w)));
    memo.emplace(live, value);
    return value;
  };
  return rec(rec, g.all_vertices());
}

int min_maximal_matching(const Graph& g) {
  const int n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  // Vertices are decided in index order: either left unmatched (then every
  // earlier neighbour must already be matched) or matched to a later free
  // neighbour. Maximality is completed at the leaf.
  auto rec = [&](auto&& self, int v, VertexSet matched, int size) -> void {
    if (size >= best) return;
    if (v == n) {
      for (auto [a, b] : g.edges())
        if (!set_contains(matched, a) && !set_contains(matched, b)) return;
      best = size;
      return;
    }
    if (set_contains(matched, v)) {
      self(self, v + 1, matched, size);
      return;
    }
    for (int w : set_members(g.neighbors(v) & ~matched)) {
      if (w > v) self(self, v + 1, matched | vertex_bit(v) | vertex_bit(w), size + 1);
    }
    const VertexSet earlier = vertex_bit(v) - 1;
    if ((g.neighbors(v) & earlier & ~matched) == 0) self(self, v + 1, matched, size);
  };
  rec(rec, 0, 0, 0);
  return best == std::numeric_limits<int>::max() ? 0 : best;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  Bipartition out;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : set_members(g.neighbors(v))) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) (color[v] == 0 ? out.first : out.second) |= vertex_bit(v);
  return out;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_connected(const Graph& g) {
  if (g.num_vertices() <= 1) return true;
  VertexSet seen = vertex_bit(0);
  VertexSet frontier = seen;
  while (frontier != 0) {
    const VertexSet next = g.neighbors_of_set(frontier) & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == g.all_vertices();
}

bool is_vertex_cover(const Graph& g, VertexSet c) {
  for (auto [u, v] : g.edges())
    if (!set_contains(c, u) && !set_contains(c, v)) return false;
  return true;
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
  // Complements of maximal independent sets, via Bron-Kerbosch with pivoting
  // on the complement graph.
  const VertexSet all = g.all_vertices();
  auto non_neighbors = [&](int v) { return all & ~g.closed_neighborhood(v); };
  std::vector<VertexSet> covers;
  auto rec = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
    if (p == 0 && x == 0) {
      covers.push_back(all & ~r);
      return;
    }
    const int pivot = std::countr_zero(p | x);
    for (int v : set_members(p & ~non_neighbors(pivot))) {
      self(self, r | vertex_bit(v), p & non_neighbors(v), x & non_neighbors(v));
      p &= ~vertex_bit(v);
      x |= vertex_bit(v);
    }
  };
  rec(rec, 0, all, 0);
  std::sort(covers.begin(), covers.end(), [](VertexSet a, VertexSet b) {
    if (set_size(a) != set_size(b)) return set_size(a) < set_size(b);
    return set_members(a) < set_members(b);
  });
  return covers;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite_graph(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

}  // namespace coverdepth
