#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "oddhole/vertex_set.hpp"

namespace oddhole {

using Edge = std::pair<Vertex, Vertex>;

/// Ordered vertex sequence; consecutive members are meant to be adjacent.
using Path = std::vector<Vertex>;

/// Cyclic vertex sequence claimed to be a hole; the edge back from the last
/// vertex to the first is implicit.
using HoleWitness = std::vector<Vertex>;

inline constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

inline bool reachable(int distance) { return distance < kUnreachable; }

/// Immutable simple graph on vertices 0..n-1.
///
/// Adjacency is kept twice: as bitset rows for O(1) pair queries and as sorted
/// neighbour lists for traversal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::invalid_argument on loops, repeated edges or ids out of range.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> neighbor_list(Vertex v) const { return lists_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(lists_[static_cast<std::size_t>(v)].size()); }

  VertexSet closed_neighbors(Vertex v) const {
    VertexSet s = neighbors(v);
    s.insert(v);
    return s;
  }
  VertexSet all_vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Same graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::vector<Vertex>> lists_;
};

Graph complement(const Graph& g);

/// Induced subgraph on `mask` with vertices renumbered in increasing id order;
/// used only where a compact copy is wanted (oracles, probes).
Graph induced_subgraph(const Graph& g, const VertexMask& mask, std::vector<Vertex>* old_ids = nullptr);

/// True iff seq is a path of g[mask] with no edge between non-consecutive
/// members. Throws std::invalid_argument if seq repeats a vertex.
bool is_induced_path(const Graph& g, const VertexMask& mask, std::span<const Vertex> seq);
bool is_induced_path(const Graph& g, std::span<const Vertex> seq);

/// True iff w is a chordless cycle of length >= 4 in g.
bool is_hole(const Graph& g, std::span<const Vertex> w);
/// True iff w is a chordless cycle of odd length >= 5 in g.
bool is_odd_hole(const Graph& g, std::span<const Vertex> w);

/// Unweighted distances from source inside g[mask]; kUnreachable elsewhere.
std::vector<int> bfs_distances(const Graph& g, const VertexMask& mask, Vertex source);

/// BFS result with deterministic parents: each reached vertex points at its
/// lowest-id neighbour one layer closer to the source.
struct ShortestPathTree {
  Vertex source = -1;
  std::vector<int> dist;
  std::vector<Vertex> parent;

  bool reaches(Vertex v) const { return reachable(dist[static_cast<std::size_t>(v)]); }
  /// Path source..v, or empty when v is unreachable.
  Path path_to(Vertex v) const;
};

ShortestPathTree shortest_path_tree(const Graph& g, const VertexMask& mask, Vertex source);

/// Deterministic shortest u-v path in g[mask], listed from u to v.
std::optional<Path> shortest_path(const Graph& g, const VertexMask& mask, Vertex u, Vertex v);

/// Union of the interiors of all shortest u-v paths in g[mask].
VertexMask shortest_path_union_interior(const Graph& g, const VertexMask& mask, Vertex u, Vertex v);

/// Vertices of `mask` outside `set` with a neighbour in `set`.
VertexSet boundary(const Graph& g, const VertexMask& mask, const VertexSet& set);

/// Rotate/reflect a cycle so it starts at its smallest vertex and continues
/// towards the smaller of that vertex's two cycle neighbours.
HoleWitness canonical_cycle(std::span<const Vertex> cycle);

}  // namespace oddhole
