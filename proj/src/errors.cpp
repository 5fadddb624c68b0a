#include "gkz/errors.hpp"

namespace gkz {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ParameterResonant: return "ParameterResonant";
    case ErrorCode::FirstRowNotOnes: return "FirstRowNotOnes";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::VariableMismatch: return "VariableMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::FiltrationBoundExceeded: return "FiltrationBoundExceeded";
    case ErrorCode::SectionSearchFailed: return "SectionSearchFailed";
    case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
  }
  return "Unknown";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return 2;
    case ErrorCode::FiltrationBoundExceeded:
    case ErrorCode::SectionSearchFailed:
    case ErrorCode::SearchBoundExceeded:
      return 4;
    default:
      return 3;
  }
}

}  // namespace gkz
