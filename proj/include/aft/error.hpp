#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aft {

enum class ErrorCode {
  kDisconnectedInput,
  kCycleDetected,
  kBadVertexId,
  kDuplicateEdge,
  kNotALeaf,
  kTooSmall,
  kTooLarge,
  kSameVertex,
  kOutOfRange,
  kNotAsymmetric,
  kStuckNotAtE7,
  kParseError,
  kIoError,
  kOverflow,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class TreeError : public std::runtime_error {
 public:
  TreeError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aft
