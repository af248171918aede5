#pragma once

#include <stdexcept>
#include <string>

namespace qcat {

enum class ErrorKind {
  NotComplementary,
  BadParameters,
  DegreeMismatch,
  ComponentCountMismatch,
  AlphabetMismatch,
  RepeatedCoefficient,
  TooLarge,
  WrongShape,
  Parse,
};

const char* error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it
/// to a diagnostic without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qcat
