#pragma once

#include <optional>
#include <string_view>

#include "oddhole/graph.hpp"

namespace oddhole {

/// Which part of the pipeline produced a hole.
enum class Stage {
  kNone,
  kCleanPrepass,
  kJewel,
  kPyramid,
  kHeavyCleanable,
  kSimple,
  kType1,
  kType2,
  kType3,
  kType4,
  kType5,
  kType6,
  kOracle,
};

std::string_view stage_name(Stage s);

struct DetectionResult {
  std::optional<HoleWitness> hole;
  Stage stage = Stage::kNone;

  bool found() const { return hole.has_value(); }
};

}  // namespace oddhole
