#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dloci {

enum class ErrorCode {
  IncompatibleSeries,
  NonNilpotentArgument,
  UnknownVariable,
  BadForm,
  NotUnimodular,
  InconsistentTopology,
  UnknownBasis,
  NonIntegralIndex,
  PositiveIndex,
  DegreeMismatch,
  BasisMismatch,
  IncompleteInput,
  ManifestError,
  DivisionByZero,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// message is prefixed with the code name so CLI output stays greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dloci
