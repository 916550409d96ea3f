#include "homlie/error.hpp"

namespace homlie {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompatibleRadicands: return "IncompatibleRadicands";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PoleAtSample: return "PoleAtSample";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotALieAlgebra: return "NotALieAlgebra";
    case ErrorCode::SingularTwist: return "SingularTwist";
    case ErrorCode::TwistNotAutomorphism: return "TwistNotAutomorphism";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::RootNotInField: return "RootNotInField";
    case ErrorCode::NotNilpotentTwist: return "NotNilpotentTwist";
    case ErrorCode::HomJacobiFails: return "HomJacobiFails";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::DivergentEntry: return "DivergentEntry";
    case ErrorCode::ClaimedEdgeBlocked: return "ClaimedEdgeBlocked";
    case ErrorCode::NonEdgeUnobstructed: return "NonEdgeUnobstructed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateAssignment: return "DuplicateAssignment";
    case ErrorCode::IndexOrder: return "IndexOrder";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace homlie
