#ifndef M0N_ERROR_HPP_
#define M0N_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace m0n {

enum class ErrorCode {
  SyntaxError,
  PartTooSmall,
  NotAPartition,
  AmbientMismatch,
  DuplicateLabelInPart,
  CrossingFactors,
  EmptyNonTrivial,
  InvalidTree,
  WeightIdentityViolation,
  NotSingleEdge,
  TooSmall,
  NotSunLike,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this type. `position` is a byte
// offset into parser input when the error came from text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }
  // Message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
  std::string message_;
};

}  // namespace m0n

#endif  // M0N_ERROR_HPP_
