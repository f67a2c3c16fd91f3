#include "coverdepth/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "coverdepth/errors.hpp"

namespace coverdepth {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::size_t stop = end == std::string_view::npos ? text.size() : end;
    std::string_view line = text.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

/// Column of `part` inside `line`, 1-based.
int column_of(std::string_view line, std::string_view part) {
  return static_cast<int>(part.data() - line.data()) + 1;
}

int parse_int(std::string_view line, std::string_view token, int line_no) {
  int value = 0;
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (token.empty() || ec != std::errc() || ptr != end || value < 0)
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line_no,
                     column_of(line, token));
  return value;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

Graph parse_edge_list(const std::vector<std::string_view>& lines) {
  std::optional<Graph> g;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const std::string_view raw = lines[li];
    const auto toks = tokens(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "n") {
      if (g) throw ParseError("duplicate 'n' header", line_no, column_of(raw, toks[0]));
      if (toks.size() != 2) throw ParseError("expected 'n <count>'", line_no, column_of(raw, toks[0]));
      const int n = parse_int(raw, toks[1], line_no);
      if (n > kMaxVertices) throw ParseError("at most 64 vertices are supported", line_no, column_of(raw, toks[1]));
      g = Graph(n);
    } else if (toks[0] == "e") {
      if (!g) throw ParseError("edge before the 'n' header", line_no, column_of(raw, toks[0]));
      if (toks.size() != 3) throw ParseError("expected 'e <u> <v>'", line_no, column_of(raw, toks[0]));
      const int u = parse_int(raw, toks[1], line_no);
      const int v = parse_int(raw, toks[2], line_no);
      if (u >= g->num_vertices()) throw ParseError("vertex out of range", line_no, column_of(raw, toks[1]));
      if (v >= g->num_vertices()) throw ParseError("vertex out of range", line_no, column_of(raw, toks[2]));
      g->add_edge(u, v);
    } else {
      throw ParseError("unknown directive '" + std::string(toks[0]) + "'", line_no, column_of(raw, toks[0]));
    }
  }
  if (!g) throw ParseError("missing 'n' header", 1, 1);
  return *g;
}

Graph parse_compact(std::string_view line, int line_no) {
  const std::string_view body = trim(line);
  const auto semi = body.find(';');
  const std::string_view head = body.substr(0, semi);
  if (head.substr(0, 2) != "n=") throw ParseError("expected 'n='", line_no, column_of(line, head));
  const int n = parse_int(line, trim(head.substr(2)), line_no);
  if (n > kMaxVertices) throw ParseError("at most 64 vertices are supported", line_no, column_of(line, head));
  Graph g(n);
  if (semi == std::string_view::npos) return g;
  std::string_view rest = trim(body.substr(semi + 1));
  if (rest.substr(0, 6) != "edges=") throw ParseError("expected 'edges='", line_no, column_of(line, rest));
  rest = rest.substr(6);
  while (!trim(rest).empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) throw ParseError("expected 'u-v'", line_no, column_of(line, item));
    const auto a = trim(item.substr(0, dash));
    const auto b = trim(item.substr(dash + 1));
    const int u = parse_int(line, a, line_no);
    const int v = parse_int(line, b, line_no);
    if (u >= n) throw ParseError("vertex out of range", line_no, column_of(line, a));
    if (v >= n) throw ParseError("vertex out of range", line_no, column_of(line, b));
    g.add_edge(u, v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return g;
}

}  // namespace

Graph parse_graph6(std::string_view raw) {
  std::string_view line = trim(raw);
  if (line.substr(0, 10) == ">>graph6<<") line = line.substr(10);
  auto value = [&](std::size_t pos) {
    if (pos >= line.size()) throw ParseError("graph6 string is truncated", 1, static_cast<int>(pos) + 1);
    const int c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126) throw ParseError("invalid graph6 character", 1, static_cast<int>(pos) + 1);
    return c - 63;
  };
  if (line.empty()) throw ParseError("empty graph6 string", 1, 1);
  std::size_t pos = 0;
  int n = 0;
  if (line[0] == '~') {
    if (line.size() > 1 && line[1] == '~') throw ParseError("graph too large for graph6 input", 1, 2);
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    n = value(0);
    pos = 1;
  }
  if (n > kMaxVertices) throw ParseError("at most 64 vertices are supported", 1, 1);
  Graph g(n);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + (bits + 5) / 6;
  if (line.size() != expected)
    throw ParseError("graph6 length " + std::to_string(line.size()) + " does not match " + std::to_string(expected) +
                         " for n=" + std::to_string(n),
                     1, static_cast<int>(std::min(line.size(), expected)) + 1);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = value(pos + k / 6);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>((n >> 12) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int chunk = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = split_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const std::string_view body = trim(strip_comment(lines[li]));
    if (body.empty()) continue;
    if (body.substr(0, 2) == "n=") {
      for (std::size_t rest = li + 1; rest < lines.size(); ++rest)
        if (!trim(strip_comment(lines[rest])).empty())
          throw ParseError("compact form takes a single line", static_cast<int>(rest) + 1, 1);
      return parse_compact(lines[li], static_cast<int>(li) + 1);
    }
    const auto toks = tokens(body);
    if (toks[0] == "n" || toks[0] == "e") return parse_edge_list(lines);
    try {
      return parse_graph6(body);
    } catch (const ParseError& e) {
      throw ParseError(std::string("unrecognised graph text: ") + e.what(), static_cast<int>(li) + 1, e.column());
    }
  }
  throw ParseError("no graph found in input", 1, 1);
}

std::uint64_t enumerate_graphs(int n, const EnumerationFilter& filter,
                               const std::function<void(const Graph&)>& visit, int max_n) {
  if (n < 0 || n > max_n) {
    throw InputError("enumeration supports 0 <= n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (std::popcount(mask) < filter.min_edges) continue;
    Graph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((mask >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
    if (filter.bipartite_only && !is_bipartite(g)) continue;
    if (filter.connected_only && !is_connected(g)) continue;
    ++count;
    visit(g);
  }
  return count;
}

std::vector<Graph> all_graphs(int n, const EnumerationFilter& filter, int max_n) {
  std::vector<Graph> out;
  enumerate_graphs(n, filter, [&](const Graph& g) { out.push_back(g); }, max_n);
  return out;
}

}  // namespace coverdepth
