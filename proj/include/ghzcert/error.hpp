#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghzcert {

enum class ErrorCode {
  EmptyEdge,
  VertexOutOfRange,
  BadLevel,
  Disconnected,
  TooFewVertices,
  TooManyVertices,
  TooManyEdges,
  TooLarge,
  SameVertex,
  DimMismatch,
  RetriesExhausted,
  DimensionInfeasible,
  NegativeExponent,
  NonScalarCoefficients,
  NotOrthRep,
  GridTooLarge,
  LevelsUnsupported,
  ParseError,
  IoError,
};

/// Stable identifier used in machine-readable error output, e.g. "Disconnected".
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(message), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }

  // Offending edge (or entry) index, when the error concerns one.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace ghzcert
