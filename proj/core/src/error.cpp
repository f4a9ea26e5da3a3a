#include "bicl/error.hpp"

namespace bicl {

const char* to_string(Precondition p) noexcept {
  switch (p) {
    case Precondition::kMinOrder: return "order >= 3";
    case Precondition::kConnected: return "connected";
    case Precondition::kInducedC4Free: return "induced-C4-free";
    case Precondition::kFalseTwinFree: return "false-twin-free";
    case Precondition::kMinDegreeTwo: return "minimum degree >= 2";
    case Precondition::kGoodAssignment: return "good assignment exists";
  }
  return "unknown";
}

}  // namespace bicl
