#include "skewind/error.hpp"

namespace skewind {

  char const* to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::malformed_input:
        return "malformed-input";
      case ErrorCode::bound_exceeded:
        return "bound-exceeded";
      case ErrorCode::signature_mismatch:
        return "signature-mismatch";
      case ErrorCode::undefined_composition:
        return "undefined-composition";
      case ErrorCode::malformed_system:
        return "malformed-system";
      case ErrorCode::axiom_violation:
        return "axiom-violation";
      case ErrorCode::skeleton_not_closed:
        return "skeleton-not-closed";
      case ErrorCode::composition_ambiguity:
        return "composition-ambiguity";
      case ErrorCode::action_invalid:
        return "action-invalid";
      case ErrorCode::roundtrip_failure:
        return "roundtrip-failure";
    }
    return "unknown";
  }

}  // namespace skewind
