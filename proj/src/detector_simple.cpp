#include "oddhole/detector_simple.hpp"

#include <array>
#include <unordered_map>

#include "oddhole/clean_hole.hpp"

namespace oddhole {

namespace {

std::vector<std::array<Vertex, 4>> induced_p4s(const Graph& g) {
  std::vector<std::array<Vertex, 4>> out;
  for (Vertex c2 = 0; c2 < g.order(); ++c2)
    for (Vertex c3 : g.neighbor_list(c2))
      for (Vertex c1 : g.neighbor_list(c2)) {
        if (c1 == c3 || g.adjacent(c1, c3)) continue;
        for (Vertex c4 : g.neighbor_list(c3))
          if (c4 != c2 && c4 != c1 && !g.adjacent(c4, c2) && !g.adjacent(c4, c1)) out.push_back({c1, c2, c3, c4});
      }
  return out;
}

std::vector<std::array<Vertex, 3>> induced_p3s(const Graph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex d1 : g.neighbor_list(x))
      for (Vertex d2 : g.neighbor_list(x))
        if (d1 != d2 && !g.adjacent(d1, d2)) out.push_back({d1, x, d2});
  return out;
}

}  // namespace

DetectionResult detect_simple(const Graph& g) {
  if (g.order() < 5) return {};
  const VertexSet all = g.all_vertices();
  const auto p4s = induced_p4s(g);
  const auto p3s = induced_p3s(g);
  // Many guesses delete the same set; the clean test only depends on it.
  std::unordered_map<VertexSet, bool, VertexSetHash> tested;

  for (const auto& c : p4s) {
    const VertexSet x2 = heavy_cleaning_set(g, c);
    for (const auto& [d1, x, d2] : p3s) {
      VertexSet x1 = g.neighbors(d1) & g.neighbors(d2);
      x1.erase(x);
      const VertexSet g1 = all - (x1 | x2);
      if (!g1.contains(d1) || !g1.contains(d2)) continue;
      const VertexSet y = g1 - g.closed_neighbors(x);
      VertexSet yd = y;
      yd.insert(d1);
      yd.insert(d2);
      const auto dist1 = bfs_distances(g, yd, d1);
      const auto dist2 = bfs_distances(g, yd, d2);
      for (Vertex d3 = y.first(); d3 != -1; d3 = y.next(d3 + 1)) {
        const auto i3 = static_cast<std::size_t>(d3);
        if (!reachable(dist1[i3]) || dist1[i3] != dist2[i3]) continue;
        const auto dist3 = bfs_distances(g, yd, d3);
        VertexSet f(g.order());
        y.for_each([&](Vertex v) {
          const auto iv = static_cast<std::size_t>(v);
          if (v == d3 || !reachable(dist3[iv])) return;
          if (dist3[iv] + dist1[iv] == dist1[i3] || dist3[iv] + dist2[iv] == dist2[i3]) f.insert(v);
        });
        VertexSet seeds = f;
        seeds.insert(d3);
        VertexSet x3 = boundary(g, g1, seeds);
        for (Vertex v : {d1, d2, d3, x}) x3.erase(v);
        VertexSet survivors = all - (x1 | x2 | x3);
        survivors.erase(x);
        auto [it, fresh] = tested.try_emplace(survivors, false);
        if (!fresh) continue;
        if (auto r = test_clean(g, survivors); r.found()) return {std::move(r.hole), Stage::kSimple};
      }
    }
  }
  return {};
}

DetectionResult detect_with_simple_pipeline(const Graph& g) {
  auto c = classify_candidate(g);
  if (!c.is_candidate()) {
    const Stage s = c.stage == CandidateStage::kJewel     ? Stage::kJewel
                    : c.stage == CandidateStage::kPyramid ? Stage::kPyramid
                                                          : Stage::kHeavyCleanable;
    return {std::move(c.hole), s};
  }
  return detect_simple(g);
}

}  // namespace oddhole
