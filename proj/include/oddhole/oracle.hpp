#pragma once

#include <functional>
#include <optional>

#include "oddhole/configurations.hpp"
#include "oddhole/graph.hpp"

// Exponential-time reference searches. They exist to cross-check the
// polynomial detectors and are only practical on small graphs (roughly n <= 16
// sparse, n <= 12 dense; pyramids n <= 11).
namespace oddhole::oracle {

/// Visits every hole of g exactly once (as a cyclic sequence starting at its
/// smallest vertex). The visitor returns true to stop the enumeration.
void for_each_hole(const Graph& g, const std::function<bool(std::span<const Vertex>)>& visit);

std::optional<HoleWitness> find_odd_hole(const Graph& g);

/// Length of a shortest odd hole, or nullopt if g has none.
std::optional<int> shortest_odd_hole_length(const Graph& g);

/// All odd holes of minimum length.
std::vector<HoleWitness> shortest_odd_holes(const Graph& g);

std::optional<PyramidWitness> find_pyramid(const Graph& g);
std::optional<JewelWitness> find_jewel(const Graph& g);

}  // namespace oddhole::oracle
