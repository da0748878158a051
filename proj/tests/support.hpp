#pragma once

// Shared fixtures for the test binaries: exhaustive small-graph enumeration,
// seeded random graphs and candidate generators.

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <numeric>
#include <random>
#include <unordered_set>
#include <vector>

#include "oddhole/clean_hole.hpp"
#include "oddhole/configurations.hpp"
#include "oddhole/corpus.hpp"
#include "oddhole/graph.hpp"
#include "oddhole/oracle.hpp"
#include "oddhole/structure_probes.hpp"

namespace oddhole::fixtures {

// Adjacency bits of the upper triangle, in (i<j) lexicographic order, after
// renaming vertex v to perm[v].
inline std::uint64_t code_under(const Graph& g, const std::vector<Vertex>& perm) {
  const int n = g.order();
  std::vector<Vertex> inv(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = v;
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      code = (code << 1) | (g.adjacent(inv[static_cast<std::size_t>(i)], inv[static_cast<std::size_t>(j)]) ? 1 : 0);
  return code;
}

// Canonical code: the maximum code over relabelings that list vertices by
// nonincreasing degree. Isomorphic graphs get equal codes. Small n only.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  });
  // Permute within each block of equal degree.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && g.degree(order[j]) == g.degree(order[i])) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  bool first = true;
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == blocks.size()) {
      for (std::size_t pos = 0; pos < order.size(); ++pos) perm[static_cast<std::size_t>(order[pos])] = static_cast<Vertex>(pos);
      const auto c = code_under(g, perm);
      if (first || c > best) best = c;
      first = false;
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, b + 1);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  rec(rec, 0);
  return best;
}

/// One representative of every isomorphism class on exactly n vertices
/// (n <= 8), built by adding a vertex to each class on n - 1 vertices.
inline std::vector<Graph> graphs_on(int n) {
  if (n == 0) return {Graph(0)};
  std::vector<Graph> out;
  std::unordered_set<std::uint64_t> seen;
  for (const Graph& h : graphs_on(n - 1)) {
    const auto base = h.edges();
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      auto es = base;
      for (int v = 0; v < n - 1; ++v)
        if (mask & (1u << v)) es.emplace_back(v, n - 1);
      Graph g(n, es);
      if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
    }
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto d = bfs_distances(g, g.all_vertices(), 0);
  return std::all_of(d.begin(), d.end(), [](int x) { return reachable(x); });
}

inline Graph random_gnp(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return gnp(n, p, rng);
}

inline std::vector<Vertex> random_permutation(int n, std::uint64_t seed) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Decorated odd cycles that pass classification as candidates, i.e. the
/// instances that reach the six type detectors. Up to `want` graphs from
/// consecutive seeds starting at seed0, giving up after `budget` tries.
inline std::vector<Graph> decorated_candidates(int k, int majors, double q, std::size_t want, std::uint64_t seed0,
                                               int budget = 5000) {
  std::vector<Graph> out;
  for (int i = 0; i < budget && out.size() < want; ++i) {
    std::mt19937_64 rng(seed0 + static_cast<std::uint64_t>(i));
    Graph g = decorated_odd_cycle(k, majors, q, rng);
    if (classify_candidate(g).is_candidate()) out.push_back(std::move(g));
  }
  return out;
}


/// Which of the six shortest-odd-hole types `hole` has (bit t-1 for type t),
/// straight from the case definitions: x is a major vertex with a longest
/// gap D = d1..d2 among all major vertices (length >= 3), c2c3 is a hole edge
/// whose ends see x and every major vertex nonadjacent to x, and the names
/// are arranged so that c2, c3, d1, x, d2 are distinct except possibly c2 = d1.
inline std::bitset<6> hole_types(const Graph& g, std::span<const Vertex> hole) {
  std::bitset<6> out;
  const int k = static_cast<int>(hole.size());
  const VertexSet majors = probes::c_major_vertices(g, hole);
  int longest = 0;
  majors.for_each([&](Vertex x) {
    for (const auto& p : probes::x_gaps(g, hole, x).gaps) longest = std::max(longest, static_cast<int>(p.size()) - 1);
  });
  if (longest < 3) return out;
  majors.for_each([&](Vertex x) {
    VertexSet must = majors - g.neighbors(x);  // includes x itself
    for (const auto& gap : probes::x_gaps(g, hole, x).gaps) {
      if (static_cast<int>(gap.size()) - 1 != longest) continue;
      VertexSet interior(g.order());
      for (std::size_t i = 1; i + 1 < gap.size(); ++i) interior.insert(gap[i]);
      const bool short_gap = 2 * longest < k;
      for (int e = 0; e < k; ++e) {
        const Vertex u = hole[static_cast<std::size_t>(e)], v = hole[static_cast<std::size_t>((e + 1) % k)];
        bool dominated = true;
        must.for_each([&](Vertex y) { dominated = dominated && (g.adjacent(y, u) || g.adjacent(y, v)); });
        if (!dominated) continue;
        for (int flip_c = 0; flip_c < 2; ++flip_c)
          for (int flip_d = 0; flip_d < 2; ++flip_d) {
            const Vertex c2 = flip_c ? v : u, c3 = flip_c ? u : v;
            const Vertex d1 = flip_d ? gap.back() : gap.front(), d2 = flip_d ? gap.front() : gap.back();
            if (c3 == d1 || c3 == d2 || c2 == d2 || c2 == x || c3 == x) continue;
            const bool c3_inside = interior.contains(c3);
            if (c2 != d1) {
              if (interior.contains(c2) || c3_inside) continue;
              out.set(short_gap ? 0 : 1);
            } else if (!c3_inside) {
              out.set(short_gap ? 2 : 3);
            } else {
              out.set(short_gap ? 4 : 5);
            }
          }
      }
    }
  });
  return out;
}

/// Graphs meeting the structural hypotheses of the type detectors: no
/// pyramid, no jewel, no 5-hole, and a shortest odd hole of at least one of
/// the six types (which types, per hole_types over all shortest odd holes).
struct TypedInstance {
  Graph g;
  std::bitset<6> types;
};

inline std::vector<TypedInstance> typed_instances(int k, int majors, double q, int tries, std::uint64_t seed0 = 0) {
  std::vector<TypedInstance> out;
  for (int s = 0; s < tries; ++s) {
    std::mt19937_64 rng(seed0 + static_cast<std::uint64_t>(s));
    Graph g = decorated_odd_cycle(k, majors, q, rng);
    if (find_pyramid(g) || find_jewel(g)) continue;
    const auto holes = oracle::shortest_odd_holes(g);
    if (holes.empty() || holes.front().size() == 5) continue;
    std::bitset<6> t;
    for (const auto& h : holes) t |= hole_types(g, h);
    if (t.any()) out.push_back({std::move(g), t});
  }
  return out;
}

}  // namespace oddhole::fixtures
