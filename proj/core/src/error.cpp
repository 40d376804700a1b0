#include "powerlambda/error.hpp"

namespace powerlambda {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ParameterTooSmall: return "ParameterTooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EvenPrime: return "EvenPrime";
    case ErrorCode::NotPGroup: return "NotPGroup";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::SameClass: return "SameClass";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::EmptyLabelling: return "EmptyLabelling";
    case ErrorCode::BadPath: return "BadPath";
    case ErrorCode::SpanTooLarge: return "SpanTooLarge";
    case ErrorCode::NotValid: return "NotValid";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::UnequalSizes: return "UnequalSizes";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::CrossAdjacency: return "CrossAdjacency";
    case ErrorCode::ThinLevel: return "ThinLevel";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code) {}

TimeoutError::TimeoutError(const std::string& what, long long lower_bound,
                           std::optional<long long> upper_bound)
    : Error(ErrorCode::Timeout, what), lower_(lower_bound), upper_(upper_bound) {}

}  // namespace powerlambda
