#pragma once

#include <array>
#include <optional>

#include "oddhole/graph.hpp"

namespace oddhole {

/// Apex joined to a triangle base by three induced paths. paths[i] runs from
/// the apex to base vertex paths[i].back().
struct PyramidWitness {
  Vertex apex = -1;
  std::array<Path, 3> paths;

  Vertex base(int i) const { return paths[static_cast<std::size_t>(i)].back(); }
};

/// Five vertices v[0..4] forming the 5-cycle pattern plus a path from v[0]
/// to v[3] whose interior avoids v[1], v[2], v[4] and their neighbourhoods.
struct JewelWitness {
  std::array<Vertex, 5> v{};
  Path path;
};

bool verify_pyramid(const Graph& g, const PyramidWitness& w);
bool verify_jewel(const Graph& g, const JewelWitness& w);

/// Polynomial jewel search; the returned witness always verifies.
std::optional<JewelWitness> find_jewel(const Graph& g);
std::optional<JewelWitness> find_jewel(const Graph& g, const VertexMask& mask);

/// Polynomial pyramid search over base triangles, apex, apex-neighbours and
/// path midpoints, assembling paths from restricted shortest paths. The
/// returned witness always verifies.
std::optional<PyramidWitness> find_pyramid(const Graph& g);
std::optional<PyramidWitness> find_pyramid(const Graph& g, const VertexMask& mask);

/// Throws std::invalid_argument if the witness does not verify.
HoleWitness odd_hole_from_pyramid(const Graph& g, const PyramidWitness& w);
HoleWitness odd_hole_from_jewel(const Graph& g, const JewelWitness& w);

}  // namespace oddhole
