#pragma once

#include <bitset>
#include <optional>
#include <utility>
#include <vector>

#include "oddhole/detection.hpp"

namespace oddhole {

/// Two disjoint vertex sets whose members each come with a route to a hub.
///
/// routes[v] (indexed by vertex id) runs from v to hub_a when v is in `a` and
/// to hub_b when v is in `b`. With a single hub (hub_b == hub_a) this is the
/// classic odd-linkage instance; two distinct hubs model the instance in which
/// the hubs have been identified into one vertex.
struct LinkageInstance {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  Vertex hub_a = -1;
  Vertex hub_b = -1;
  std::vector<Path> routes;
};

/// Every (a, b) pair whose routes join into an induced a-b path through the
/// hub(s): the routes minus their hubs are disjoint and anticomplete, and with
/// two hubs neither route touches the other hub. Lexicographic order.
std::vector<std::pair<Vertex, Vertex>> linked_pairs(const Graph& g, const LinkageInstance& inst);

/// Single-hub instance: first pair whose routes form an induced path. Throws
/// std::invalid_argument when the instance is malformed (overlapping sets,
/// hub adjacent to a member, a route that is not an induced path to the hub
/// or that passes through another member).
std::optional<std::pair<Vertex, Vertex>> odd_linkage(const Graph& g, const LinkageInstance& inst);

DetectionResult detect_type1(const Graph& g);
DetectionResult detect_type2(const Graph& g);
DetectionResult detect_type3(const Graph& g);
DetectionResult detect_type4(const Graph& g);
DetectionResult detect_type5(const Graph& g);
DetectionResult detect_type6(const Graph& g);

using TypeSelection = std::bitset<6>;

/// Runs the selected type detectors (bit i selects type i+1) in order. Meant
/// for candidates, where absence of a hole of every type means no odd hole.
DetectionResult detect_fast(const Graph& g, TypeSelection types = TypeSelection{}.set());

/// Full detector: classification into "odd hole found" or "candidate", then
/// the six type detectors. Every reported hole has been verified.
DetectionResult detect(const Graph& g, TypeSelection types = TypeSelection{}.set());

}  // namespace oddhole
