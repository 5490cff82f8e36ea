#include "dloci/error.hpp"

namespace dloci {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IncompatibleSeries: return "IncompatibleSeries";
    case ErrorCode::NonNilpotentArgument: return "NonNilpotentArgument";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::BadForm: return "BadForm";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::InconsistentTopology: return "InconsistentTopology";
    case ErrorCode::UnknownBasis: return "UnknownBasis";
    case ErrorCode::NonIntegralIndex: return "NonIntegralIndex";
    case ErrorCode::PositiveIndex: return "PositiveIndex";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::IncompleteInput: return "IncompleteInput";
    case ErrorCode::ManifestError: return "ManifestError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace dloci
