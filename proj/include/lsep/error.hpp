#pragma once

#include <stdexcept>
#include <string>

namespace lsep {

enum class ErrorCode {
  GeometryMismatch,
  AntipodalPair,
  Degenerate,
  NoCircumcircle,
  Domain,
  NoThreshold,
  NotSaturated,
  Construction,
  Parse,
};

const char* to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lsep
