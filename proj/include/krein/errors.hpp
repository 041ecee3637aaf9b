#pragma once

#include <stdexcept>
#include <string>

namespace krein {

enum class ErrorCode {
  DimensionMismatch,
  NotHermitian,
  SetsIntersect,
  SpectraOverlap,
  IllConditioned,
  NonpositiveSeparation,
  NonRealSpectrum,
  NoDefiniteInvariantSubspace,
  NotAGraph,
  NotContractive,
  NotUniformlyDefinite,
  TooLargePerturbation,
  LambdaInSpectrumA1,
  LambdaInUnperturbedSpectrum,
  HypothesesNotMet,
  ProfileNotOdd,
  QuadratureUnconverged,
  InvalidInput,
};

const char* error_name(ErrorCode code);

/// Exception carrying one of the named failure modes above. The name is
/// stable and machine-readable (the CLI prints it and maps it to exit codes).
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }
  const char* name() const { return error_name(code_); }

private:
  ErrorCode code_;
};

} // namespace krein
