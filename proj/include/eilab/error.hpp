#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace eilab {

enum class ErrorCode {
  InvalidVertex,
  SelfLoopRejected,
  InvalidSurgery,
  TooLarge,
  MalformedGraph6,
  MalformedDocument,
  CapExceeded,
  NotApplicable,
  NotConnected,
  UnknownProperty,
  InternalInconsistency,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by exact searches that refuse to run past their configured cap.
// When the search already knows a valid bound it is carried here, labeled
// as a bound.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::optional<int> upper_bound = std::nullopt)
      : Error(ErrorCode::CapExceeded, what), upper_bound_(upper_bound) {}

  std::optional<int> upper_bound() const noexcept { return upper_bound_; }

 private:
  std::optional<int> upper_bound_;
};

}  // namespace eilab
