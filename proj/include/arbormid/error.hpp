#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arbormid {

enum class ErrorKind {
  EdgeCountMismatch,
  NotConnected,
  DuplicateEdge,
  SelfLoop,
  VertexOutOfRange,
  EmptySet,
  TooLarge,
  InvalidParams,
  IndexOutOfRange,
  NotPendant,
  AdjacentAlready,
  SameVertex,
  InvalidHangingPath,
  BadDestination,
  CoreMismatch,
  ReconstructionMismatch,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type. The message names the
// offending datum (vertex id, edge, parameter value).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace arbormid
