#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace covlab {

enum class ErrorCode {
  DuplicateEdge,
  VertexOutOfRange,
  EmptyEdge,
  CapacityExceeded,
  InfeasibleParameters,
  PreconditionViolated,
  UnsupportedOrder,
  UnknownName,
  RaggedMatrix,
  NonBinaryCharacter,
  EmptyBlock,
  InvalidSpec,
  ParseError,
  CatalogMismatch,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (CLI, Python bindings) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covlab
