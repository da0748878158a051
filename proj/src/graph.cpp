#include "oddhole/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace oddhole {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), VertexSet(n)), lists_(static_cast<std::size_t>(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (adjacent(u, v))
      throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    rows_[static_cast<std::size_t>(u)].insert(v);
    rows_[static_cast<std::size_t>(v)].insert(u);
    ++edge_count_;
  }
  for (Vertex v = 0; v < n; ++v) lists_[static_cast<std::size_t>(v)] = rows_[static_cast<std::size_t>(v)].to_vector();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbor_list(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> es;
  es.reserve(edge_count_);
  for (auto [u, v] : edges()) es.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return Graph(n_, es);
}

Graph complement(const Graph& g) {
  std::vector<Edge> es;
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph induced_subgraph(const Graph& g, const VertexMask& mask, std::vector<Vertex>* old_ids) {
  std::vector<Vertex> ids = mask.to_vector();
  std::vector<Vertex> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) index[static_cast<std::size_t>(ids[i])] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) {
    Vertex a = index[static_cast<std::size_t>(u)], b = index[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) es.emplace_back(a, b);
  }
  if (old_ids != nullptr) *old_ids = ids;
  return Graph(static_cast<int>(ids.size()), es);
}

namespace {

bool all_distinct(const Graph& g, std::span<const Vertex> seq) {
  VertexSet seen(g.order());
  for (Vertex v : seq) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

}  // namespace

bool is_induced_path(const Graph& g, const VertexMask& mask, std::span<const Vertex> seq) {
  if (!all_distinct(g, seq)) throw std::invalid_argument("path repeats a vertex or leaves the graph");
  for (Vertex v : seq)
    if (!mask.contains(v)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
  return true;
}

bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
  return is_induced_path(g, g.all_vertices(), seq);
}

bool is_hole(const Graph& g, std::span<const Vertex> w) {
  const std::size_t k = w.size();
  if (k < 4 || !all_distinct(g, w)) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool cyclic_neighbours = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(w[i], w[j]) != cyclic_neighbours) return false;
    }
  return true;
}

bool is_odd_hole(const Graph& g, std::span<const Vertex> w) { return w.size() % 2 == 1 && is_hole(g, w); }

ShortestPathTree shortest_path_tree(const Graph& g, const VertexMask& mask, Vertex source) {
  const auto n = static_cast<std::size_t>(g.order());
  ShortestPathTree t;
  t.source = source;
  t.dist.assign(n, kUnreachable);
  t.parent.assign(n, -1);
  if (!mask.contains(source)) return t;
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(source);
  t.dist[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const int du = t.dist[static_cast<std::size_t>(u)];
    for (Vertex w : g.neighbor_list(u)) {
      auto wi = static_cast<std::size_t>(w);
      if (!mask.contains(w)) continue;
      if (t.dist[wi] == kUnreachable) {
        t.dist[wi] = du + 1;
        t.parent[wi] = u;
        queue.push_back(w);
      } else if (t.dist[wi] == du + 1 && u < t.parent[wi]) {
        t.parent[wi] = u;
      }
    }
  }
  return t;
}

Path ShortestPathTree::path_to(Vertex v) const {
  Path p;
  if (!reaches(v)) return p;
  for (Vertex cur = v; cur != -1; cur = parent[static_cast<std::size_t>(cur)]) p.push_back(cur);
  std::reverse(p.begin(), p.end());
  return p;
}

std::vector<int> bfs_distances(const Graph& g, const VertexMask& mask, Vertex source) {
  return shortest_path_tree(g, mask, source).dist;
}

std::optional<Path> shortest_path(const Graph& g, const VertexMask& mask, Vertex u, Vertex v) {
  if (!mask.contains(u) || !mask.contains(v)) return std::nullopt;
  auto tree = shortest_path_tree(g, mask, u);
  if (!tree.reaches(v)) return std::nullopt;
  return tree.path_to(v);
}

VertexMask shortest_path_union_interior(const Graph& g, const VertexMask& mask, Vertex u, Vertex v) {
  VertexMask out(g.order());
  if (u == v || !mask.contains(u) || !mask.contains(v)) return out;
  const auto du = bfs_distances(g, mask, u);
  const int target = du[static_cast<std::size_t>(v)];
  if (!reachable(target) || target <= 1) return out;
  const auto dv = bfs_distances(g, mask, v);
  mask.for_each([&](Vertex w) {
    auto wi = static_cast<std::size_t>(w);
    if (w != u && w != v && reachable(du[wi]) && reachable(dv[wi]) && du[wi] + dv[wi] == target) out.insert(w);
  });
  return out;
}

VertexSet boundary(const Graph& g, const VertexMask& mask, const VertexSet& set) {
  VertexSet out(g.order());
  set.for_each([&](Vertex v) { out |= g.neighbors(v); });
  out &= mask;
  out -= set;
  return out;
}

HoleWitness canonical_cycle(std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  if (k == 0) return {};
  const auto start = static_cast<std::size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  const Vertex fwd = cycle[(start + 1) % k];
  const Vertex back = cycle[(start + k - 1) % k];
  HoleWitness out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    out.push_back(fwd <= back ? cycle[(start + i) % k] : cycle[(start + k - i) % k]);
  return out;
}

}  // namespace oddhole
