#pragma once

#include <vector>

#include "oddhole/graph.hpp"

// Executable forms of the hole-structure definitions: major vertices,
// cleanliness, gaps, normal sets and heavy edges. Holes are given as cyclic
// vertex sequences; gap paths are listed along the hole.
namespace oddhole::probes {

struct GapReport {
  std::vector<Path> gaps;

  std::vector<int> lengths() const;
};

/// Vertices whose neighbours on the hole do not fit in any three consecutive
/// hole vertices.
VertexSet c_major_vertices(const Graph& g, std::span<const Vertex> hole);
bool is_clean(const Graph& g, std::span<const Vertex> hole);

/// Gaps of `a` (a subset of the hole's vertices) in the hole. A gap is a
/// component of hole - a together with its attachments in a; when a is empty
/// the single gap is the whole hole, and when a is one vertex the single gap
/// closes up through it. Gap length counts edges.
GapReport a_gaps(std::span<const Vertex> hole, const VertexSet& a);
bool is_normal(std::span<const Vertex> hole, const VertexSet& a);

/// Hole paths of length >= 2 whose ends see x and whose interior does not.
/// Empty when x has fewer than two neighbours on the hole.
GapReport x_gaps(const Graph& g, std::span<const Vertex> hole, Vertex x);

/// Hole edges uv with u, v outside xset such that every member of xset is
/// adjacent to u or v.
std::vector<Edge> x_heavy_edges(const Graph& g, std::span<const Vertex> hole, const VertexSet& xset);

/// Hole vertices adjacent to every member of xset.
VertexSet complete_to(const Graph& g, std::span<const Vertex> hole, const VertexSet& xset);

}  // namespace oddhole::probes
