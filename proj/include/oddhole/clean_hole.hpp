#pragma once

#include <optional>

#include "oddhole/graph.hpp"

namespace oddhole {

/// Outcome of the clean-hole test: a verified odd hole, or the statement that
/// no shortest odd hole of the (masked) graph is clean.
struct CleanTestResult {
  std::optional<HoleWitness> hole;

  bool found() const { return hole.has_value(); }
};

/// Triple reassembly: for every vertex triple, join the three pairs by
/// deterministic shortest paths of g[mask] and keep the first union that is an
/// odd hole. Meaningful only when g[mask] has no pyramid or jewel; any hole it
/// returns is genuine regardless.
CleanTestResult test_clean(const Graph& g, const VertexMask& mask);
inline CleanTestResult test_clean(const Graph& g) { return test_clean(g, g.all_vertices()); }

/// Vertices other than c[0..3] adjacent to c[1] or c[2].
VertexSet heavy_cleaning_set(const Graph& g, std::span<const Vertex, 4> c);

/// For every induced four-vertex path c1-c2-c3-c4 run test_clean on g minus
/// heavy_cleaning_set. A miss means no heavy-cleanable shortest odd hole
/// (given no pyramid or jewel).
CleanTestResult test_heavy_cleanable(const Graph& g);

enum class CandidateStage { kJewel, kPyramid, kHeavyCleanable };

struct CandidateResult {
  std::optional<HoleWitness> hole;
  CandidateStage stage = CandidateStage::kHeavyCleanable;

  bool is_candidate() const { return !hole.has_value(); }
};

/// Jewel test, pyramid test, then the heavy-cleanable sweep.
CandidateResult classify_candidate(const Graph& g);

}  // namespace oddhole
