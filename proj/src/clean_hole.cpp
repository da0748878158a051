#include "oddhole/clean_hole.hpp"

#include <unordered_set>

#include "oddhole/configurations.hpp"

namespace oddhole {

CleanTestResult test_clean(const Graph& g, const VertexMask& mask) {
  const std::vector<Vertex> vs = mask.to_vector();
  const std::size_t k = vs.size();
  if (k < 5) return {};
  std::vector<ShortestPathTree> trees(static_cast<std::size_t>(g.order()));
  for (Vertex v : vs) trees[static_cast<std::size_t>(v)] = shortest_path_tree(g, mask, v);
  auto dist = [&](Vertex a, Vertex b) { return trees[static_cast<std::size_t>(a)].dist[static_cast<std::size_t>(b)]; };

  HoleWitness cycle;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const Vertex y1 = vs[i], y2 = vs[j];
      const int d12 = dist(y1, y2);
      if (!reachable(d12)) continue;
      for (std::size_t l = j + 1; l < k; ++l) {
        const Vertex y3 = vs[l];
        const int d23 = dist(y2, y3), d13 = dist(y1, y3);
        if (!reachable(d23) || !reachable(d13)) continue;
        const int total = d12 + d23 + d13;
        // Each joining path is an arc of the hole and a shortest path, so no
        // arc can be as long as the rest of the hole.
        if (total < 5 || total % 2 == 0 || 2 * d12 > total || 2 * d23 > total || 2 * d13 > total) continue;
        cycle.clear();
        for (auto [from, to] : {std::pair{y1, y2}, std::pair{y2, y3}, std::pair{y3, y1}}) {
          Path p = trees[static_cast<std::size_t>(from)].path_to(to);
          cycle.insert(cycle.end(), p.begin(), p.end() - 1);
        }
        if (is_odd_hole(g, cycle)) return {cycle};
      }
    }
  return {};
}

VertexSet heavy_cleaning_set(const Graph& g, std::span<const Vertex, 4> c) {
  VertexSet x = g.neighbors(c[1]) | g.neighbors(c[2]);
  for (Vertex v : c) x.erase(v);
  return x;
}

CleanTestResult test_heavy_cleanable(const Graph& g) {
  const int n = g.order();
  if (n < 5) return {};
  std::unordered_set<VertexSet, VertexSetHash> tried;
  const VertexSet all = g.all_vertices();
  for (Vertex c2 = 0; c2 < n; ++c2)
    for (Vertex c3 : g.neighbor_list(c2))
      for (Vertex c1 : g.neighbor_list(c2)) {
        if (c1 == c3 || g.adjacent(c1, c3)) continue;
        for (Vertex c4 : g.neighbor_list(c3)) {
          if (c4 == c2 || c4 == c1 || g.adjacent(c4, c2) || g.adjacent(c4, c1)) continue;
          const std::array<Vertex, 4> c{c1, c2, c3, c4};
          VertexSet x = heavy_cleaning_set(g, c);
          if (!tried.insert(x).second) continue;
          if (auto r = test_clean(g, all - x); r.found()) return r;
        }
      }
  return {};
}

CandidateResult classify_candidate(const Graph& g) {
  if (g.order() < 5) return {};
  if (auto j = find_jewel(g)) return {odd_hole_from_jewel(g, *j), CandidateStage::kJewel};
  if (auto p = find_pyramid(g)) return {odd_hole_from_pyramid(g, *p), CandidateStage::kPyramid};
  auto r = test_heavy_cleanable(g);
  return {std::move(r.hole), CandidateStage::kHeavyCleanable};
}

}  // namespace oddhole
