#include "oddhole/result.hpp"

#include <chrono>
#include <stdexcept>

#include "oddhole/detector_simple.hpp"
#include "oddhole/io.hpp"
#include "oddhole/oracle.hpp"

namespace oddhole {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "fast") return Algorithm::kFast;
  if (name == "simple") return Algorithm::kSimple;
  if (name == "oracle") return Algorithm::kOracle;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kFast: return "fast";
    case Algorithm::kSimple: return "simple";
    case Algorithm::kOracle: return "oracle";
  }
  return "fast";
}

DetectionResult run_detector(const Graph& g, Algorithm a, TypeSelection types) {
  switch (a) {
    case Algorithm::kFast: return detect(g, types);
    case Algorithm::kSimple: return detect_with_simple_pipeline(g);
    case Algorithm::kOracle: {
      auto h = oracle::find_odd_hole(g);
      return h ? DetectionResult{std::move(h), Stage::kOracle} : DetectionResult{};
    }
  }
  return {};
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kOddHoleFound: return "odd-hole-found";
    case Verdict::kNoOddHole: return "no-odd-hole";
    case Verdict::kPerfect: return "perfect";
    case Verdict::kImperfect: return "imperfect";
  }
  return "no-odd-hole";
}

Verdict parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::kOddHoleFound, Verdict::kNoOddHole, Verdict::kPerfect, Verdict::kImperfect})
    if (verdict_name(v) == name) return v;
  throw std::invalid_argument("unknown verdict '" + std::string(name) + "'");
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

ResultDocument detect_document(const Graph& g, Algorithm a, TypeSelection types) {
  const auto start = std::chrono::steady_clock::now();
  auto r = run_detector(g, a, types);
  ResultDocument doc;
  doc.millis = elapsed_ms(start);
  doc.verdict = r.found() ? Verdict::kOddHoleFound : Verdict::kNoOddHole;
  doc.witness = std::move(r.hole);
  doc.algorithm = algorithm_name(a);
  doc.stage = stage_name(r.stage);
  doc.digest = graph_digest(g);
  doc.order = g.order();
  return doc;
}

ResultDocument test_perfect(const Graph& g, Algorithm a) {
  const auto start = std::chrono::steady_clock::now();
  ResultDocument doc;
  doc.algorithm = algorithm_name(a);
  doc.digest = graph_digest(g);
  doc.order = g.order();
  auto r = run_detector(g, a);
  if (!r.found()) {
    r = run_detector(complement(g), a);
    doc.antihole = r.found();
  }
  doc.verdict = r.found() ? Verdict::kImperfect : Verdict::kPerfect;
  doc.witness = std::move(r.hole);
  doc.stage = stage_name(r.stage);
  doc.millis = elapsed_ms(start);
  return doc;
}

nlohmann::json to_json(const ResultDocument& r) {
  nlohmann::json j;
  j["verdict"] = verdict_name(r.verdict);
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
  if (r.verdict == Verdict::kImperfect) j["antihole"] = r.antihole;
  j["algorithm"] = r.algorithm;
  j["stage"] = r.stage;
  j["timing"] = {{"millis", r.millis}};
  j["input"] = {{"digest", r.digest}, {"order", r.order}};
  return j;
}

ResultDocument result_from_json(const nlohmann::json& j) {
  try {
    ResultDocument r;
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (const auto& w = j.at("witness"); !w.is_null()) r.witness = w.get<HoleWitness>();
    r.antihole = j.value("antihole", false);
    r.algorithm = j.at("algorithm").get<std::string>();
    r.stage = j.value("stage", "");
    r.millis = j.at("timing").at("millis").get<double>();
    r.digest = j.at("input").at("digest").get<std::string>();
    r.order = j.at("input").at("order").get<int>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed result document: ") + e.what());
  }
}

bool witness_verifies(const Graph& g, const ResultDocument& r) {
  const bool expects = r.verdict == Verdict::kOddHoleFound || r.verdict == Verdict::kImperfect;
  if (expects != r.witness.has_value()) return false;
  if (!r.witness) return true;
  if (r.antihole) return r.verdict == Verdict::kImperfect && is_odd_hole(complement(g), *r.witness);
  return is_odd_hole(g, *r.witness);
}

}  // namespace oddhole
