#include "oddhole/detection.hpp"

namespace oddhole {

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::kNone: return "none";
    case Stage::kCleanPrepass: return "clean-prepass";
    case Stage::kJewel: return "jewel";
    case Stage::kPyramid: return "pyramid";
    case Stage::kHeavyCleanable: return "heavy-cleanable";
    case Stage::kSimple: return "simple";
    case Stage::kType1: return "type1";
    case Stage::kType2: return "type2";
    case Stage::kType3: return "type3";
    case Stage::kType4: return "type4";
    case Stage::kType5: return "type5";
    case Stage::kType6: return "type6";
    case Stage::kOracle: return "oracle";
  }
  return "unknown";
}

}  // namespace oddhole
