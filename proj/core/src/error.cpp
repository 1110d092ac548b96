#include "sqroot/error.hpp"

namespace sqroot {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VertexSetMismatch: return "VertexSetMismatch";
    case ErrorCode::NotSubgraph: return "NotSubgraph";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::EmptyCollection: return "EmptyCollection";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::ConstructionSelfCheckFailed: return "ConstructionSelfCheckFailed";
    case ErrorCode::NotASquareRoot: return "NotASquareRoot";
    case ErrorCode::DisjointnessViolated: return "DisjointnessViolated";
    case ErrorCode::TranscriptMismatch: return "TranscriptMismatch";
    case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorCode::ParseError, line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line)
{
}

} // namespace sqroot
