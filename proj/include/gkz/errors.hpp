#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkz {

enum class ErrorCode {
  ParseError,
  RankDeficient,
  NotPointed,
  NotFullDimensional,
  NotHomogeneous,
  ParameterResonant,
  FirstRowNotOnes,
  DimensionUnsupported,
  VariableMismatch,
  InvalidArgument,
  FiltrationBoundExceeded,
  SectionSearchFailed,
  SearchBoundExceeded,
};

// Machine-readable name, e.g. "NotPointed".
std::string_view error_code_name(ErrorCode code);

// CLI exit status: 2 parse error, 3 precondition violation, 4 search bound.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gkz
