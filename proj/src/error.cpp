#include "blf/error.hpp"

namespace blf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::not_applicable: return "NotApplicable";
    case ErrorCode::genus_mismatch: return "GenusMismatch";
    case ErrorCode::not_sphere: return "NotSphere";
    case ErrorCode::unknown_stratum: return "UnknownStratum";
    case ErrorCode::is_pencil: return "IsPencil";
    case ErrorCode::arrow_violation: return "ArrowViolation";
    case ErrorCode::index_violation: return "IndexViolation";
    case ErrorCode::invalid_result: return "InvalidResult";
    case ErrorCode::not_adjacent: return "NotAdjacent";
    case ErrorCode::lift_mismatch: return "LiftMismatch";
    case ErrorCode::not_a_cusp: return "NotACusp";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::not_a_pencil: return "NotAPencil";
    case ErrorCode::no_sections: return "NoSections";
    case ErrorCode::unknown_reference: return "UnknownReference";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::duplicate_id: return "DuplicateId";
  }
  return "Unknown";
}

}  // namespace blf
