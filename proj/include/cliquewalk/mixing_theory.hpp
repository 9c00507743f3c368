#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliquewalk/generators.hpp"
#include "cliquewalk/spectrum.hpp"

namespace cliquewalk {

// 1 on [0,1], x + sqrt(x^2 - 1) beyond. Throws NegativeInput.
double psi(double x);

// eps (d-1) / (1 - eps), exactly 1 at eps = 1/d. Throws OutOfRange outside [0, 1/d].
double delta_from_epsilon(double eps, int d);

// delta above this counts as the simple walk.
inline constexpr double kSimpleWalkDelta = 1.0 - 1e-12;

struct WalkParams {
  double epsilon = 0.0;
  double delta = 0.0;
  double p_stay = 0.0;   // eps / (l-1)
  double p_leave = 0.0;  // (1-eps) / ((d-1)(l-1))
  int d = 0;
  int l = 0;
};

WalkParams walk_params(double eps, int d, int l);

enum class Regime { LeqRegime, GtRegime, SimpleWalkLimit, OutsideHypotheses };
std::string_view regime_name(Regime r);

// Which branch of the rate formula applies at (d, l, delta); ignores the spectrum.
// d = 2 is accepted in the l(1-delta) <= d branch when delta > 0.
Regime regime_for(int d, int l, double delta);

struct CliqueWalkRate {
  std::optional<double> rho_tilde;
  Regime regime = Regime::OutsideHypotheses;
};

// summary must be taken at delta_from_epsilon(eps, d).
// Throws Disconnected, BipartiteGraph or CompleteGraph.
CliqueWalkRate mixing_rate_clique_walk(const SpectralSummary& s, int d, int l, double eps);

// Same, parameterized by delta directly.
CliqueWalkRate mixing_rate_clique_walk_delta(const SpectralSummary& s, int d, int l, double delta);

double mixing_rate_simple(const SpectralSummary& s, int d, int l);
// Throws DegreeTooSmall when d(l-1) <= 2.
double mixing_rate_nbrw(const SpectralSummary& s, int d, int l);

struct ComparisonConstants {
  double A = 1, B = 1, C = 1, D = 1;
  std::optional<double> E, F;  // only when l <= d/4 + 1/d + 1

  bool operator==(const ComparisonConstants&) const = default;
};

// l <= d/4 + 1/d + 1, checked in integers as 4dl <= (d+2)^2.
bool cases45_admissible(int d, int l);

// Needs d >= l >= 2. B is taken as 1 at l = 2.
ComparisonConstants comparison_constants(int d, int l);

enum class CaseLabel { Case1, Case2, Case3, Case4, Case5, Unclassified };
std::string_view case_name(CaseLabel c);

struct CaseClassification {
  CaseLabel label = CaseLabel::Unclassified;
  bool on_boundary = false;  // an inequality is tight, or another case also matches

  bool operator==(const CaseClassification&) const = default;
};

// Five-case split for rho_tilde / rho' at delta = 0 (closed intervals, lowest case wins).
// Needs d >= l, d >= 3 and lambda >= 2 sqrt((d-1)(l-1)); throws HypothesisViolation.
CaseClassification classify_case(const SpectralSummary& s, int d, int l);

// Three-case split for rho_tilde / rho under the same hypotheses (Case4/5 never returned).
CaseClassification classify_simple_case(const SpectralSummary& s, int d, int l);

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
};

Interval case_ratio_bounds(CaseLabel c, const ComparisonConstants& k);
double simple_case_lower_bound(CaseLabel c, int d, int l);

struct MixingReport {
  double epsilon = 0.0;
  double delta = 0.0;
  int d = 0;
  int l = 0;
  SpectralSummary summary;       // at delta
  SpectralSummary summary_zero;  // at delta = 0
  Regime regime = Regime::OutsideHypotheses;
  std::optional<double> rho_tilde;
  std::optional<double> rho_simple;
  std::optional<double> rho_nbrw;
  std::optional<double> ratio_simple;  // rho_tilde / rho_simple
  std::optional<double> ratio_nbrw;    // rho_tilde / rho_nbrw
  std::optional<double> margin;        // 1 - rho_tilde
  // Comparison block, only at eps = 0.
  std::optional<CaseClassification> case_label;
  std::optional<CaseClassification> simple_case;
  std::optional<ComparisonConstants> constants;
  bool small_lambda_applicable = false;
  std::vector<std::string> notes;

  bool operator==(const MixingReport&) const = default;
};

// Spectrum must be the adjacency spectrum of a d(l-1)-regular graph.
MixingReport mixing_report(const Spectrum& spec, int d, int l, double eps);
// Synthetic spectrum: lambda1 = d(l-1), lambda2, lambda_n.
MixingReport mixing_report_from_values(double lambda2, double lambda_n, int d, int l, double eps);

struct BoundCheck {
  bool applicable = false;
  bool pass = false;
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;  // +inf when one-sided
  double margin_low = 0.0;
  double margin_high = 0.0;
};

struct CaseBoundCheck {
  CaseLabel label = CaseLabel::Unclassified;
  BoundCheck nbrw_ratio;         // two-sided rho_tilde / rho'
  BoundCheck simple_ratio;       // rho_tilde / rho lower bound
  std::optional<bool> below_simple;  // rho_tilde < rho, when the simple-walk cases apply
  bool pass = false;
};

// Relative slack for closed bounds.
inline constexpr double kBoundSlack = 1e-9;

CaseBoundCheck check_case_bounds(const MixingReport& report);

struct SmallLambdaCheck {
  BoundCheck simple_ratio;  // rho_tilde / rho >= d(l-1) / (2(d-1)(l-1) + (l-2) sqrt((d-1)(l-1)))
  BoundCheck nbrw_ratio;    // A <= rho_tilde / rho' <= C
  bool pass = false;
};

// Needs lambda <= 2 sqrt((d-1)(l-1)) at delta = 0 and an instance inside the hypotheses.
SmallLambdaCheck small_lambda_bounds(const SpectralSummary& s, int d, int l);

// Partial geometries.
std::vector<double> pg_spectrum(const PartialGeometryParams& p);

enum class Comparison { Slower, Faster, Undetermined };  // rho_tilde vs rho'
std::string_view comparison_name(Comparison c);

struct PgReport {
  PartialGeometryParams params;
  std::vector<double> spectrum;
  MixingReport report;            // spectral route at eps = 0
  double rho_tilde_closed = 0.0;  // branch value R >= K or R < K
  Comparison predicted = Comparison::Undetermined;
  Comparison observed = Comparison::Undetermined;
};

// Throws InvalidParams for invalid (K,R,T) or when neither branch applies (K = 2 is bipartite).
PgReport pg_mixing_report(const PartialGeometryParams& p);

struct LatinCrossoverReport {
  int l = 0;
  double rho_tilde = 0.0;         // spectral route on pg(l,3,2)
  double rho_nbrw = 0.0;
  double ratio = 0.0;
  double rho_tilde_closed = 0.0;  // 1/sqrt(2l-2)
  double rho_nbrw_closed = 0.0;   // 1/sqrt(3l-4) or the curved branch past 9 + 2 sqrt(14)
  double asymptotic_ratio = 0.0;  // 3/sqrt(2l)
  Comparison observed = Comparison::Undetermined;
};

LatinCrossoverReport latin_crossover_report(int l);

// Exceptional point -(d + (l-2)(1-delta)) / (2 sqrt((l-1)(1-delta)(d-1+delta))).
double exceptional_point(int d, int l, double delta);

// limsup |q_k(y)|^{1/k}. y counts as the exceptional point when within 1e-12 relative.
double qk_growth_rate_closed_form(double y, int d, int l, double delta);
bool is_exceptional_point(double y, int d, int l, double delta);

}  // namespace cliquewalk
