#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pseudocurve {

enum class ErrorKind {
  InvalidBranch,
  MultipleOrTruncatedBranch,
  TruncationTooShort,
  IndeterminateWithinTruncation,
  InvalidCuspType,
  GenusFormulaInconsistent,
  LineBundleOnly,
  SingularPoint,
  DomainError,
  DegenerateMap,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every module. The kind is stable and machine-readable;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pseudocurve
