#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blf {

enum class ErrorCode {
  invalid_argument,
  not_applicable,
  genus_mismatch,
  not_sphere,
  unknown_stratum,
  is_pencil,
  arrow_violation,
  index_violation,
  invalid_result,
  not_adjacent,
  lift_mismatch,
  not_a_cusp,
  precondition_violated,
  not_a_pencil,
  no_sections,
  unknown_reference,
  syntax_error,
  duplicate_id,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every module operation. The code is stable and is what the
/// CLI prints; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace blf
