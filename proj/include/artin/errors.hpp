#pragma once

#include <stdexcept>
#include <string>

namespace artin {

enum class ErrorCode {
  ParseError,       // malformed graph file or word syntax
  InvalidArgument,  // precondition violation (unknown vertex, bad multiplicity, ...)
  NotSpherical,     // operation requires a spherical-type graph
  NotConnected,     // operation requires a connected graph
  UnsupportedBaseCase,  // decomposition reaches a free-of-infinity, non-spherical leaf
  ResourceLimit,    // a configured cap was exceeded; the instance is too large
  Internal,         // a self-check failed; indicates a bug, never a wrong answer
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace artin
