#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "oddhole/detector_fast.hpp"

namespace oddhole {

enum class Algorithm { kFast, kSimple, kOracle };

/// "fast" / "simple" / "oracle"; throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm a);

/// Runs one of the three detectors. `types` only affects kFast.
DetectionResult run_detector(const Graph& g, Algorithm a, TypeSelection types = TypeSelection{}.set());

enum class Verdict { kOddHoleFound, kNoOddHole, kPerfect, kImperfect };

std::string_view verdict_name(Verdict v);
Verdict parse_verdict(std::string_view name);

struct ResultDocument {
  Verdict verdict = Verdict::kNoOddHole;
  std::optional<HoleWitness> witness;
  /// Imperfect verdicts only: the witness is a hole of the complement.
  bool antihole = false;
  std::string algorithm;
  std::string stage;
  double millis = 0;
  std::string digest;
  int order = 0;
};

/// Timed detection with the verdict filled in.
ResultDocument detect_document(const Graph& g, Algorithm a, TypeSelection types = TypeSelection{}.set());

/// Perfect iff neither g nor its complement has an odd hole.
ResultDocument test_perfect(const Graph& g, Algorithm a = Algorithm::kFast);

nlohmann::json to_json(const ResultDocument& r);
/// Throws std::invalid_argument on a malformed document.
ResultDocument result_from_json(const nlohmann::json& j);

/// Checks the witness against the verdict: present exactly for found /
/// imperfect, and an odd hole of g (or of its complement for antiholes).
bool witness_verifies(const Graph& g, const ResultDocument& r);

}  // namespace oddhole
