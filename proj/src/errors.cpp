#include "krein/errors.hpp"

namespace krein {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::SetsIntersect: return "SetsIntersect";
    case ErrorCode::SpectraOverlap: return "SpectraOverlap";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::NonpositiveSeparation: return "NonpositiveSeparation";
    case ErrorCode::NonRealSpectrum: return "NonRealSpectrum";
    case ErrorCode::NoDefiniteInvariantSubspace: return "NoDefiniteInvariantSubspace";
    case ErrorCode::NotAGraph: return "NotAGraph";
    case ErrorCode::NotContractive: return "NotContractive";
    case ErrorCode::NotUniformlyDefinite: return "NotUniformlyDefinite";
    case ErrorCode::TooLargePerturbation: return "TooLargePerturbation";
    case ErrorCode::LambdaInSpectrumA1: return "LambdaInSpectrumA1";
    case ErrorCode::LambdaInUnperturbedSpectrum: return "LambdaInUnperturbedSpectrum";
    case ErrorCode::HypothesesNotMet: return "HypothesesNotMet";
    case ErrorCode::ProfileNotOdd: return "ProfileNotOdd";
    case ErrorCode::QuadratureUnconverged: return "QuadratureUnconverged";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "UnknownError";
}

} // namespace krein
