#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace goeritz {

enum class ErrorKind {
  OddExponent,
  IndexOutOfRange,
  DiagonalPivot,
  NotOrientable,
  OddEuler,
  BadEdge,
  ContractLoop,
  Disconnected,
  BadArcLabels,
  SplitDiagram,
  BadNumbering,
  NotCheckerboardColorable,
  BadRegion,
  PositiveGenus,
  NoRotation,
  BadMoveSite,
  BadInput,
  TooManyCrossings,
  NotAnInteger,
};

std::string_view to_string(ErrorKind kind);

// Every precondition failure in the library surfaces as this exception; the
// kind is the stable machine-readable name used by the CLI.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace goeritz
