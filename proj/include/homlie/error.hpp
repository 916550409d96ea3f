#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

enum class ErrorCode {
  IncompatibleRadicands,
  DivisionByZero,
  PoleAtSample,
  SingularMatrix,
  NotALieAlgebra,
  SingularTwist,
  TwistNotAutomorphism,
  InvalidParameter,
  RootNotInField,
  NotNilpotentTwist,
  HomJacobiFails,
  NotNilpotent,
  DivergentEntry,
  ClaimedEdgeBlocked,
  NonEdgeUnobstructed,
  ParseError,
  DuplicateAssignment,
  IndexOrder,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace homlie
