#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cliquewalk {

enum class Errc {
  // graph validation
  MalformedGraph,
  NotAClique,
  EdgeUncovered,
  EdgeDoubleCovered,
  IrregularCliqueMembership,
  MixedCliqueOrder,
  NotRegular,
  NotOrthogonal,
  // theory hypotheses
  BipartiteGraph,
  CompleteGraph,
  Disconnected,
  DegreeTooSmall,
  HypothesisViolation,
  // numerical
  NotSymmetric,
  NoConvergence,
  AllEigenvaluesMinusD,
  Underflow,
  GenerationFailed,
  NumericalFailure,
  // bad arguments
  InvalidParams,
  NotPrime,
  NegativeInput,
  OutOfRange,
  EpsilonAtSimpleWalk,
  TooLarge,
  Usage,
};

enum class ErrorCategory { Validation, Hypothesis, Numerical, Usage };

std::string_view errc_name(Errc code);
ErrorCategory category_of(Errc code);

// Process exit code for the category: 1 validation, 2 hypothesis, 3 numerical, 4 usage.
int exit_code_of(ErrorCategory cat);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  Errc code_;
};

}  // namespace cliquewalk
