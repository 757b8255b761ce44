#pragma once

#include <stdexcept>
#include <string>

namespace roadfield {

// Error kinds, mapped to CLI exit codes in tools/.
enum class ErrorCode {
  NonPositiveParameter,
  DiffusivityOrder,
  BadConfig,
  NoRootInBracket,
  NonConvergence,
  StabilityViolation,
  EmptyFront,
  InsufficientData,
  SpeedBelowReference,
  SpeedNonPositive,
  SingularSystem,
  FrontOutsideGrid,
  StencilOutOfDomain,
  ResidualBelowNoise,
  MissingInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace roadfield
