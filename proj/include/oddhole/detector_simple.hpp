#pragma once

#include "oddhole/detection.hpp"

namespace oddhole {

/// Preliminary detector for candidates: guess an induced path c1-c2-c3-c4, an
/// induced path d1-x-d2 and a vertex d3, build the deletion sets X1, X2, X3
/// and run the clean-hole test on what survives. Roughly n^8 guesses; keep it
/// to n <= ~12.
///
/// Sound on any input; "no odd hole" is only guaranteed for candidates.
DetectionResult detect_simple(const Graph& g);

/// classify_candidate followed by detect_simple.
DetectionResult detect_with_simple_pipeline(const Graph& g);

}  // namespace oddhole
