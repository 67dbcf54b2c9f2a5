#pragma once

#include <stdexcept>
#include <string>

namespace anyonwalk {

// Broad failure class; maps onto the CLI exit codes.
enum class ErrorKind {
  Usage,    // bad invocation or configuration (exit 1)
  Domain,   // precondition of an operation violated (exit 2)
  Numeric,  // numerical check failed at run time (exit 3)
};

/// Base error for the library. `code()` is a short stable tag such as
/// "invalid-level" or "irreducible-word" that tests and the CLI match on.
class AnyonWalkError : public std::runtime_error {
 public:
  AnyonWalkError(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline AnyonWalkError domain_error(std::string code, const std::string& message) {
  return AnyonWalkError(ErrorKind::Domain, std::move(code), message);
}

inline AnyonWalkError numeric_error(std::string code, const std::string& message) {
  return AnyonWalkError(ErrorKind::Numeric, std::move(code), message);
}

inline AnyonWalkError usage_error(const std::string& message) {
  return AnyonWalkError(ErrorKind::Usage, "usage", message);
}

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage:
      return 1;
    case ErrorKind::Domain:
      return 2;
    case ErrorKind::Numeric:
      return 3;
  }
  return 1;
}

}  // namespace anyonwalk
