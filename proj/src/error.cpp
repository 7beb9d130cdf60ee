#include "m0n/error.hpp"

namespace m0n {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::PartTooSmall: return "PartTooSmall";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DuplicateLabelInPart: return "DuplicateLabelInPart";
    case ErrorCode::CrossingFactors: return "CrossingFactors";
    case ErrorCode::EmptyNonTrivial: return "EmptyNonTrivial";
    case ErrorCode::InvalidTree: return "InvalidTree";
    case ErrorCode::WeightIdentityViolation: return "WeightIdentityViolation";
    case ErrorCode::NotSingleEdge: return "NotSingleEdge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotSunLike: return "NotSunLike";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      position_(position),
      message_(message) {}

}  // namespace m0n
