#include "cliquewalk/error.hpp"

namespace cliquewalk {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::MalformedGraph: return "MalformedGraph";
    case Errc::NotAClique: return "NotAClique";
    case Errc::EdgeUncovered: return "EdgeUncovered";
    case Errc::EdgeDoubleCovered: return "EdgeDoubleCovered";
    case Errc::IrregularCliqueMembership: return "IrregularCliqueMembership";
    case Errc::MixedCliqueOrder: return "MixedCliqueOrder";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotOrthogonal: return "NotOrthogonal";
    case Errc::BipartiteGraph: return "BipartiteGraph";
    case Errc::CompleteGraph: return "CompleteGraph";
    case Errc::Disconnected: return "Disconnected";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::HypothesisViolation: return "HypothesisViolation";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::AllEigenvaluesMinusD: return "AllEigenvaluesMinusD";
    case Errc::Underflow: return "Underflow";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::NumericalFailure: return "NumericalFailure";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::NotPrime: return "NotPrime";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::EpsilonAtSimpleWalk: return "EpsilonAtSimpleWalk";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

ErrorCategory category_of(Errc code) {
  switch (code) {
    case Errc::MalformedGraph:
    case Errc::NotAClique:
    case Errc::EdgeUncovered:
    case Errc::EdgeDoubleCovered:
    case Errc::IrregularCliqueMembership:
    case Errc::MixedCliqueOrder:
    case Errc::NotRegular:
    case Errc::NotOrthogonal:
      return ErrorCategory::Validation;
    case Errc::BipartiteGraph:
    case Errc::CompleteGraph:
    case Errc::Disconnected:
    case Errc::DegreeTooSmall:
    case Errc::HypothesisViolation:
      return ErrorCategory::Hypothesis;
    case Errc::NotSymmetric:
    case Errc::NoConvergence:
    case Errc::AllEigenvaluesMinusD:
    case Errc::Underflow:
    case Errc::GenerationFailed:
    case Errc::NumericalFailure:
      return ErrorCategory::Numerical;
    default:
      return ErrorCategory::Usage;
  }
}

int exit_code_of(ErrorCategory cat) {
  switch (cat) {
    case ErrorCategory::Validation: return 1;
    case ErrorCategory::Hypothesis: return 2;
    case ErrorCategory::Numerical: return 3;
    case ErrorCategory::Usage: return 4;
  }
  return 4;
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace cliquewalk
