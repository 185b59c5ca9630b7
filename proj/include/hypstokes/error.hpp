#pragma once

#include <stdexcept>
#include <string>

namespace hypstokes {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  NotGeneric,
  AmbiguousClustering,
  InexactInput,
  PoleAtCenter,
  SingularMatrix,
  HypothesesViolated,
  ShapeMismatch,
  ZeroLeadingEntry,
  InvalidQuiver,
  NotDiagonalizable,
  PoleOfGamma,
  SnapFailure,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

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

}  // namespace hypstokes
