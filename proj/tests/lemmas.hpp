#pragma once

// Property checks for the hole-structure lemmas, run over generated instances
// whose hypotheses are confirmed by the oracle. Shared by the unit tests and
// the acceptance binary.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oddhole/configurations.hpp"
#include "oddhole/corpus.hpp"
#include "oddhole/graph.hpp"
#include "oddhole/io.hpp"
#include "oddhole/oracle.hpp"
#include "oddhole/structure_probes.hpp"

namespace oddhole::fixtures {

struct Tally {
  int graphs = 0;      // instances satisfying the hypotheses
  int exercised = 0;   // of those, ones where the property quantifies over something
  int violations = 0;
  std::string first_violation;

  void fail(const Graph& g, const std::string& what) {
    if (violations++ == 0) first_violation = encode_graph6(g) + ": " + what;
  }
};

/// A graph with at least one odd hole, its shortest odd holes and the
/// configuration facts the lemma hypotheses need.
struct LemmaInstance {
  Graph g;
  std::vector<HoleWitness> shortest;
  bool has_5hole = false;
};

/// Odd cycle C_{2k+1} plus extra vertices. Half the seeds attach the extras as
/// major vertices (decorated cycles); the rest attach each extra to at most
/// three consecutive cycle vertices and join extras at random, which keeps
/// the base cycle clean. Kept when the oracle finds no pyramid and no jewel.
inline std::vector<LemmaInstance> lemma_instances(int count, std::uint64_t seed0, int max_order = 10) {
  std::vector<LemmaInstance> out;
  for (std::uint64_t s = seed0; static_cast<int>(out.size()) < count && s < seed0 + 50ull * static_cast<std::uint64_t>(count); ++s) {
    std::mt19937_64 rng(s);
    const int k = std::uniform_int_distribution<int>(2, 4)(rng);
    const int len = 2 * k + 1;
    const int extras = std::uniform_int_distribution<int>(1, std::max(1, max_order - len))(rng);
    Graph g;
    if (s % 2 == 0) {
      const double q = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      g = decorated_odd_cycle(k, extras, q, rng);
    } else {
      std::vector<Edge> es;
      for (Vertex i = 0; i < len; ++i) es.emplace_back(i, (i + 1) % len);
      std::bernoulli_distribution coin(0.5);
      for (int e = 0; e < extras; ++e) {
        const Vertex v = len + e;
        const Vertex at = std::uniform_int_distribution<Vertex>(0, len - 1)(rng);
        for (int j = 0; j < 3; ++j)
          if (coin(rng)) es.emplace_back((at + j) % len, v);
        for (Vertex u = len; u < v; ++u)
          if (coin(rng)) es.emplace_back(u, v);
      }
      g = Graph(len + extras, es);
    }
    if (oracle::find_pyramid(g) || oracle::find_jewel(g)) continue;
    LemmaInstance inst{g, oracle::shortest_odd_holes(g), false};
    if (inst.shortest.empty()) continue;
    inst.has_5hole = inst.shortest.front().size() == 5;
    out.push_back(std::move(inst));
  }
  return out;
}

/// Decorated odd cycles of length 9..13 with two or three major vertices,
/// mostly pairwise nonadjacent. These carry the pairs of nonadjacent majors
/// that smaller instances almost never have without a pyramid or jewel.
inline std::vector<LemmaInstance> major_pair_instances(int count, std::uint64_t seed0) {
  std::vector<LemmaInstance> out;
  for (std::uint64_t s = seed0; static_cast<int>(out.size()) < count && s < seed0 + 200ull * static_cast<std::uint64_t>(count); ++s) {
    std::mt19937_64 rng(s);
    const int k = std::uniform_int_distribution<int>(4, 6)(rng);
    const int majors = std::uniform_int_distribution<int>(2, 3)(rng);
    Graph g = decorated_odd_cycle(k, majors, 0.2, rng);
    if (oracle::find_pyramid(g) || oracle::find_jewel(g)) continue;
    LemmaInstance inst{g, oracle::shortest_odd_holes(g), false};
    inst.has_5hole = inst.shortest.front().size() == 5;
    out.push_back(std::move(inst));
  }
  return out;
}

inline std::vector<Vertex> members(const VertexSet& s) { return s.to_vector(); }

inline std::string hole_text(std::span<const Vertex> hole) {
  std::ostringstream os;
  for (std::size_t i = 0; i < hole.size(); ++i) os << (i ? "-" : "") << hole[i];
  return os.str();
}

/// Every stable set X of C-major vertices: the X-complete hole vertices are
/// normal. Hypotheses: no jewel, no pyramid.
inline Tally check_stable_neighbours(const std::vector<LemmaInstance>& insts) {
  Tally t;
  for (const auto& inst : insts) {
    ++t.graphs;
    bool any = false;
    for (const auto& hole : inst.shortest) {
      const auto majors = members(probes::c_major_vertices(inst.g, hole));
      const std::size_t m = majors.size();
      for (std::uint32_t bits = 1; bits < (1u << m); ++bits) {
        VertexSet x(inst.g.order());
        bool stable = true;
        for (std::size_t i = 0; i < m; ++i) {
          if (!(bits >> i & 1)) continue;
          x.for_each([&](Vertex y) { stable = stable && !inst.g.adjacent(y, majors[i]); });
          x.insert(majors[i]);
        }
        if (!stable) continue;
        any = true;
        if (!probes::is_normal(hole, probes::complete_to(inst.g, hole, x)))
          t.fail(inst.g, "hole " + hole_text(hole) + ": complete set of a stable major set is not normal");
      }
    }
    t.exercised += any;
  }
  return t;
}

/// Every C-major vertex has at least four neighbours on C. Hypotheses: no
/// jewel, no pyramid, no 5-hole (what the argument uses of candidacy).
inline Tally check_many_neighbours(const std::vector<LemmaInstance>& insts) {
  Tally t;
  for (const auto& inst : insts) {
    if (inst.has_5hole) continue;
    ++t.graphs;
    bool any = false;
    for (const auto& hole : inst.shortest) {
      const VertexSet on = VertexSet::of(inst.g.order(), hole);
      probes::c_major_vertices(inst.g, hole).for_each([&](Vertex v) {
        any = true;
        if ((inst.g.neighbors(v) & on).size() < 4)
          t.fail(inst.g, "major vertex " + std::to_string(v) + " with fewer than four hole neighbours");
      });
    }
    t.exercised += any;
  }
  return t;
}

/// For nonadjacent C-major x, y, every induced x-y path with interior in V(C)
/// has even length. Paths are enumerated exhaustively: the interior is a
/// proper arc of C.
inline Tally check_major_jump(const std::vector<LemmaInstance>& insts) {
  Tally t;
  for (const auto& inst : insts) {
    if (inst.has_5hole) continue;
    ++t.graphs;
    const Graph& g = inst.g;
    bool any = false;
    for (const auto& hole : inst.shortest) {
      const int k = static_cast<int>(hole.size());
      const auto majors = members(probes::c_major_vertices(g, hole));
      for (std::size_t i = 0; i < majors.size(); ++i)
        for (std::size_t j = 0; j < majors.size(); ++j) {
          const Vertex x = majors[i], y = majors[j];
          if (x == y || g.adjacent(x, y)) continue;
          for (int start = 0; start < k; ++start)
            for (int len = 1; len < k; ++len) {
              Path p{x};
              for (int s = 0; s < len; ++s) p.push_back(hole[static_cast<std::size_t>((start + s) % k)]);
              p.push_back(y);
              if (!is_induced_path(g, p)) continue;
              any = true;
              if ((p.size() - 1) % 2 != 0)
                t.fail(g, "odd path " + hole_text(p) + " between majors on hole " + hole_text(hole));
            }
        }
    }
    t.exercised += any;
  }
  return t;
}

/// Every set X of C-major vertices with a member nonadjacent to all others
/// has an X-heavy edge on C. Hypotheses: no jewel, pyramid or 5-hole.
inline Tally check_heavy_edge(const std::vector<LemmaInstance>& insts) {
  Tally t;
  for (const auto& inst : insts) {
    if (inst.has_5hole) continue;
    ++t.graphs;
    const Graph& g = inst.g;
    bool any = false;
    for (const auto& hole : inst.shortest) {
      const auto majors = members(probes::c_major_vertices(g, hole));
      const std::size_t m = majors.size();
      for (std::uint32_t bits = 1; bits < (1u << m); ++bits) {
        VertexSet x(g.order());
        for (std::size_t i = 0; i < m; ++i)
          if (bits >> i & 1) x.insert(majors[i]);
        bool has_x0 = false;
        x.for_each([&](Vertex v) { has_x0 = has_x0 || !(g.neighbors(v) & x).size(); });
        if (!has_x0) continue;
        any = true;
        if (probes::x_heavy_edges(g, hole, x).empty())
          t.fail(g, "no heavy edge for " + std::to_string(x.size()) + " majors on hole " + hole_text(hole));
      }
    }
    t.exercised += any;
  }
  return t;
}

/// For a clean shortest odd hole C and nonadjacent u, v on C: the shorter arc
/// is a shortest path, and any shortest u-v path plus the longer arc is a
/// shortest odd hole. Hypotheses: no jewel, no pyramid, C clean.
inline Tally check_short_path(const std::vector<LemmaInstance>& insts) {
  Tally t;
  for (const auto& inst : insts) {
    const Graph& g = inst.g;
    bool hyp = false, any = false;
    for (const auto& hole : inst.shortest) {
      if (!probes::is_clean(g, hole)) continue;
      hyp = true;
      const int k = static_cast<int>(hole.size());
      for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) {
          if (i == 0 && j == k - 1) continue;
          any = true;
          const Vertex u = hole[static_cast<std::size_t>(i)], v = hole[static_cast<std::size_t>(j)];
          const int forward = j - i, shorter = std::min(forward, k - forward);
          const auto d = bfs_distances(g, g.all_vertices(), u);
          if (d[static_cast<std::size_t>(v)] != shorter) {
            t.fail(g, "distance between hole vertices is not the shorter arc");
            continue;
          }
          const auto p = shortest_path(g, g.all_vertices(), u, v);
          HoleWitness cycle = *p;  // u .. v, then the longer arc back to u
          const int step = forward > k - forward ? 1 : -1;
          for (int at = (j - step + k) % k; at != i; at = (at - step + k) % k) cycle.push_back(hole[static_cast<std::size_t>(at)]);
          if (static_cast<int>(cycle.size()) != k || !is_odd_hole(g, cycle))
            t.fail(g, "shortest path plus longer arc is not a shortest odd hole: " + hole_text(cycle));
        }
    }
    t.graphs += hyp;
    t.exercised += any;
  }
  return t;
}

}  // namespace oddhole::fixtures
