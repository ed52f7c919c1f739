#include "liftspace/error.hpp"

namespace liftspace {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::BadInvolution: return "BadInvolution";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotALoop: return "NotALoop";
    case ErrorCode::NotIncident: return "NotIncident";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::BondNotSurjective: return "BondNotSurjective";
    case ErrorCode::Incompatible: return "Incompatible";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::DepthMismatch: return "DepthMismatch";
    case ErrorCode::NotDense: return "NotDense";
    case ErrorCode::LevelOrder: return "LevelOrder";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownReference: return "UnknownReference";
    case ErrorCode::DuplicateSection: return "DuplicateSection";
  }
  return "Unknown";
}

}  // namespace liftspace
