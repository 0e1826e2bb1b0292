#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace surfpack {

enum class ErrorCode {
  EmptyPacking,
  InstanceMismatch,
  DegenerateBin,
  OutOfBin,
  NoFit,
  BadSequence,
  TooLarge,
  NothingToSelect,
  NoBaseline,
  NumericalFault,
  EmptyInstance,
  BadRange,
  BadInput,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures in the library surface as this exception; the
// code lets callers (and the CLI) branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace surfpack
