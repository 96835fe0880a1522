#include "ghzcert/error.hpp"

namespace ghzcert {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::BadLevel: return "BadLevel";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::DimensionInfeasible: return "DimensionInfeasible";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::NonScalarCoefficients: return "NonScalarCoefficients";
    case ErrorCode::NotOrthRep: return "NotOrthRep";
    case ErrorCode::GridTooLarge: return "GridTooLarge";
    case ErrorCode::LevelsUnsupported: return "LevelsUnsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ghzcert
