#pragma once

#include <stdexcept>
#include <string>

namespace itsec {

// Failure categories. The C API and the CLI map these onto stable status and
// exit codes, so the distinctions here are part of the contract: validation
// and parse failures are the caller's fault, cap_exceeded means an exhaustive
// enumeration was refused, invariant_violation means a property the library
// promises to uphold failed and indicates a bug or a violated theorem.
enum class ErrorKind {
  parse,
  validation,
  alphabet_mismatch,
  not_applicable,
  undefined_conditioning,
  cap_exceeded,
  invariant_violation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace itsec
