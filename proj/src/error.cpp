#include "bulab/error.hpp"

namespace bulab {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::MixedDimension: return "MixedDimension";
    case ErrorCode::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case ErrorCode::NameCollision: return "NameCollision";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::NotPseudomanifold: return "NotPseudomanifold";
    case ErrorCode::NotOrderTwo: return "NotOrderTwo";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::InvolutionNotFree: return "InvolutionNotFree";
    case ErrorCode::BoundaryInvolutionNotFree: return "BoundaryInvolutionNotFree";
    case ErrorCode::NotManifoldWithBoundary: return "NotManifoldWithBoundary";
    case ErrorCode::BoundaryNotFull: return "BoundaryNotFull";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::ComplementaryEdgePresent: return "ComplementaryEdgePresent";
    case ErrorCode::SignatureDimensionMismatch: return "SignatureDimensionMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotClosedPseudomanifold: return "NotClosedPseudomanifold";
    case ErrorCode::TargetNotStronglyConnected: return "TargetNotStronglyConnected";
    case ErrorCode::VertexUncovered: return "VertexUncovered";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InputNotAntipodeFree: return "InputNotAntipodeFree";
    case ErrorCode::InputNotCovering: return "InputNotCovering";
    case ErrorCode::NoWitnessAtThisResolution: return "NoWitnessAtThisResolution";
    case ErrorCode::DimensionTooHigh: return "DimensionTooHigh";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace bulab
