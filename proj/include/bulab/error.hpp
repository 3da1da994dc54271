#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bulab {

enum class ErrorCode {
    EmptyInput,
    MixedDimension,
    DuplicateVertexInFacet,
    NameCollision,
    UnknownVertex,
    NotPseudomanifold,
    NotOrderTwo,
    NotSimplicial,
    InvolutionNotFree,
    BoundaryInvolutionNotFree,
    NotManifoldWithBoundary,
    BoundaryNotFull,
    LabelOutOfRange,
    ComplementaryEdgePresent,
    SignatureDimensionMismatch,
    DimensionMismatch,
    NotClosedPseudomanifold,
    TargetNotStronglyConnected,
    VertexUncovered,
    PreconditionViolated,
    InputNotAntipodeFree,
    InputNotCovering,
    NoWitnessAtThisResolution,
    DimensionTooHigh,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. The code is the stable part; the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure in one of the text formats, carrying the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::string source, int line, const std::string& message)
        : Error(ErrorCode::ParseError, source + ":" + std::to_string(line) + ": " + message),
          source_(std::move(source)), line_(line) {}

    const std::string& source() const noexcept { return source_; }
    int line() const noexcept { return line_; }

private:
    std::string source_;
    int line_;
};

} // namespace bulab
