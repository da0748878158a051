#include "oddhole/structure_probes.hpp"

namespace oddhole::probes {

std::vector<int> GapReport::lengths() const {
  std::vector<int> out;
  out.reserve(gaps.size());
  for (const auto& p : gaps) out.push_back(static_cast<int>(p.size()) - 1);
  return out;
}

VertexSet c_major_vertices(const Graph& g, std::span<const Vertex> hole) {
  const std::size_t k = hole.size();
  const VertexSet on_hole = VertexSet::of(g.order(), hole);
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (on_hole.contains(v)) continue;
    std::vector<bool> seen(k);
    int count = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (g.adjacent(v, hole[i])) {
        seen[i] = true;
        ++count;
      }
    bool fits = false;
    for (std::size_t i = 0; i < k && !fits; ++i) {
      const int inside = seen[i] + seen[(i + 1) % k] + seen[(i + 2) % k];
      fits = inside == count;
    }
    if (!fits) out.insert(v);
  }
  return out;
}

bool is_clean(const Graph& g, std::span<const Vertex> hole) { return c_major_vertices(g, hole).empty(); }

GapReport a_gaps(std::span<const Vertex> hole, const VertexSet& a) {
  const std::size_t k = hole.size();
  GapReport report;
  std::size_t first = k;
  for (std::size_t i = 0; i < k; ++i)
    if (a.contains(hole[i])) {
      first = i;
      break;
    }
  if (first == k) {
    Path whole(hole.begin(), hole.end());
    whole.push_back(hole.front());
    report.gaps.push_back(std::move(whole));
    return report;
  }
  // Walk once round the hole starting from a member of a; each maximal run of
  // non-members between two members (possibly the same one) is a gap.
  for (std::size_t step = 0; step < k; ++step) {
    const std::size_t i = (first + step) % k;
    if (!a.contains(hole[i]) || a.contains(hole[(i + 1) % k])) continue;
    Path gap{hole[i]};
    std::size_t j = (i + 1) % k;
    while (!a.contains(hole[j])) {
      gap.push_back(hole[j]);
      j = (j + 1) % k;
    }
    gap.push_back(hole[j]);
    report.gaps.push_back(std::move(gap));
  }
  return report;
}

bool is_normal(std::span<const Vertex> hole, const VertexSet& a) {
  for (int len : a_gaps(hole, a).lengths())
    if (len % 2 != 0) return false;
  return true;
}

GapReport x_gaps(const Graph& g, std::span<const Vertex> hole, Vertex x) {
  VertexSet a(g.order());
  for (Vertex v : hole)
    if (g.adjacent(x, v)) a.insert(v);
  if (a.size() < 2) return {};
  return a_gaps(hole, a);
}

std::vector<Edge> x_heavy_edges(const Graph& g, std::span<const Vertex> hole, const VertexSet& xset) {
  std::vector<Edge> out;
  const std::size_t k = hole.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex u = hole[i], v = hole[(i + 1) % k];
    if (xset.contains(u) || xset.contains(v)) continue;
    if (xset.is_subset_of(g.neighbors(u) | g.neighbors(v))) out.emplace_back(u, v);
  }
  return out;
}

VertexSet complete_to(const Graph& g, std::span<const Vertex> hole, const VertexSet& xset) {
  VertexSet out(g.order());
  for (Vertex v : hole)
    if (xset.is_subset_of(g.neighbors(v))) out.insert(v);
  return out;
}

}  // namespace oddhole::probes
