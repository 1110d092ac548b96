#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sqroot {

enum class ErrorCode {
    DuplicateVertex,
    UnknownVertex,
    SelfLoop,
    DuplicateEdge,
    ParseError,
    VertexSetMismatch,
    NotSubgraph,
    BudgetExceeded,
    InvalidInstance,
    NotAPartition,
    EmptyCollection,
    NotPlanar,
    EmptyEdgeSet,
    ImproperColoring,
    InvalidPartition,
    ConstructionSelfCheckFailed,
    NotASquareRoot,
    DisjointnessViolated,
    TranscriptMismatch,
    Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the text readers; `line()` is 1-based, 0 when the problem is
/// not tied to a single line (e.g. a header count mismatch found at EOF).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace sqroot
