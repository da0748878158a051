#include "oddhole/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>

namespace oddhole {

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "edgelist" || name == "edges") return GraphFormat::kEdgeList;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat f) { return f == GraphFormat::kGraph6 ? "graph6" : "edgelist"; }

ParseError::ParseError(const std::string& what, int line, int offset)
    : std::runtime_error("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " + what),
      line_(line),
      offset_(offset) {}

namespace {

struct Line {
  std::string_view text;
  int number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 1;
  while (!text.empty()) {
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({line, number++});
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return out;
}

bool blank(std::string_view s) { return s.find_first_not_of(" \t") == std::string_view::npos; }

// ---- graph6 ----

Graph parse_graph6_line(std::string_view s, int line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  int base = 0;
  if (s.substr(0, kHeader.size()) == kHeader) {
    s.remove_prefix(kHeader.size());
    base = static_cast<int>(kHeader.size());
  }
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 63 || s[i] > 126) throw ParseError("byte outside the graph6 range", line, base + static_cast<int>(i));
  if (s.empty()) throw ParseError("empty graph6 string", line, base);
  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > s.size())
      throw ParseError("truncated graph6 order", line, base + static_cast<int>(s.size()));
    long long v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | (s[pos++] - 63);
    return v;
  };
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] != 126) {
    pos = 1;
    n = take(3);
  } else {
    pos = 2;
    n = take(6);
  }
  if (n > 100000) throw ParseError("graph too large", line, base);
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t bits = nn * (nn - (nn > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (s.size() - pos != need)
    throw ParseError("expected " + std::to_string(need) + " adjacency bytes, found " + std::to_string(s.size() - pos),
                     line, base + static_cast<int>(pos));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  for (; k < need * 6; ++k)
    if (((s[pos + k / 6] - 63) >> (5 - k % 6)) & 1)
      throw ParseError("nonzero padding bits", line, base + static_cast<int>(pos + k / 6));
  return Graph(static_cast<int>(n), edges);
}

// ---- edge list ----

struct Cursor {
  std::string_view text;
  int line;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }

  long long integer(const char* what) {
    skip_space();
    long long v = 0;
    auto [p, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc{} || v < 0) throw ParseError(std::string("expected ") + what, line, static_cast<int>(pos));
    pos = static_cast<std::size_t>(p - text.data());
    return v;
  }

  void finish() {
    skip_space();
    if (pos != text.size()) throw ParseError("unexpected trailing text", line, static_cast<int>(pos));
  }
};

bool is_comment(std::string_view s) {
  auto i = s.find_first_not_of(" \t");
  return i != std::string_view::npos && s[i] == '#';
}

std::string comment_text(std::string_view s) {
  s.remove_prefix(s.find('#') + 1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

// Parses one edge-list document starting at lines[i]; advances i past it.
GraphDocument parse_edge_list_at(const std::vector<Line>& lines, std::size_t& i) {
  GraphDocument doc;
  doc.format = GraphFormat::kEdgeList;
  for (; i < lines.size() && (blank(lines[i].text) || is_comment(lines[i].text)); ++i)
    if (is_comment(lines[i].text) && doc.name.empty()) doc.name = comment_text(lines[i].text);
  if (i == lines.size()) {
    const int last = lines.empty() ? 1 : lines.back().number;
    throw ParseError("missing 'n m' header", last, 0);
  }
  Cursor head{lines[i].text, lines[i].number};
  const long long n = head.integer("vertex count");
  const long long m = head.integer("edge count");
  head.finish();
  if (n > 100000) throw ParseError("graph too large", head.line, 0);
  if (m > n * (n - 1) / 2) throw ParseError("more edges than a simple graph allows", head.line, 0);
  ++i;
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n));
  while (static_cast<long long>(edges.size()) < m) {
    if (i == lines.size())
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                       lines.empty() ? 1 : lines.back().number, 0);
    const Line& l = lines[i++];
    if (blank(l.text) || is_comment(l.text)) continue;
    Cursor c{l.text, l.number};
    const auto u_at = static_cast<int>(c.pos);
    const long long u = c.integer("vertex id");
    const long long v = c.integer("vertex id");
    c.finish();
    if (u >= n || v >= n) throw ParseError("vertex id out of range", l.number, u_at);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), l.number, u_at);
    const auto a = static_cast<std::size_t>(std::min(u, v)), b = static_cast<std::size_t>(std::max(u, v));
    if (seen[a].empty()) seen[a].resize(static_cast<std::size_t>(n));
    if (seen[a][b]) throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), l.number, u_at);
    seen[a][b] = true;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  doc.graph = Graph(static_cast<int>(n), edges);
  return doc;
}

}  // namespace

GraphDocument parse_graph(std::string_view text, GraphFormat format) {
  const auto lines = split_lines(text);
  if (format == GraphFormat::kGraph6) {
    const Line* found = nullptr;
    for (const auto& l : lines) {
      if (blank(l.text)) continue;
      if (found != nullptr) throw ParseError("more than one graph6 string", l.number, 0);
      found = &l;
    }
    if (found == nullptr) throw ParseError("empty input", 1, 0);
    return {parse_graph6_line(found->text, found->number), GraphFormat::kGraph6, {}};
  }
  std::size_t i = 0;
  GraphDocument doc = parse_edge_list_at(lines, i);
  for (; i < lines.size(); ++i)
    if (!blank(lines[i].text) && !is_comment(lines[i].text))
      throw ParseError("text after the last edge", lines[i].number, 0);
  return doc;
}

std::vector<GraphDocument> parse_graphs(std::string_view text, GraphFormat format) {
  const auto lines = split_lines(text);
  std::vector<GraphDocument> out;
  if (format == GraphFormat::kGraph6) {
    for (const auto& l : lines)
      if (!blank(l.text)) out.push_back({parse_graph6_line(l.text, l.number), GraphFormat::kGraph6, {}});
    return out;
  }
  std::size_t i = 0;
  for (;;) {
    while (i < lines.size() && blank(lines[i].text)) ++i;
    if (i == lines.size()) break;
    std::size_t probe = i;
    while (probe < lines.size() && (blank(lines[probe].text) || is_comment(lines[probe].text))) ++probe;
    if (probe == lines.size()) break;
    out.push_back(parse_edge_list_at(lines, i));
  }
  return out;
}

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    const int groups = n <= 258047 ? 3 : 6;
    out.append(groups == 3 ? 1 : 2, '~');
    for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(63 + ((n >> (6 * i)) & 63)));
  }
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

std::string encode_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string encode_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::kGraph6 ? encode_graph6(g) : encode_edge_list(g);
}

std::string graph_digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : encode_graph6(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace oddhole
