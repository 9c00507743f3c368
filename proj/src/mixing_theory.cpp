#include "cliquewalk/mixing_theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cliquewalk/error.hpp"

namespace cliquewalk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_theory_flags(const SpectralSummary& s) {
  if (!s.connected) throw Error(Errc::Disconnected, "graph is disconnected");
  if (s.complete) throw Error(Errc::CompleteGraph, "graph is complete");
  if (s.bipartite) throw Error(Errc::BipartiteGraph, "graph is bipartite");
}

double lambda_at_zero(const SpectralSummary& s, int l) {
  return std::max(std::abs(s.lambda2 - (l - 2)), std::abs(s.lambda_n - (l - 2)));
}

double tol_for(double scale) { return kBoundSlack * std::max(1.0, std::abs(scale)); }

BoundCheck make_check(double value, double lower, double upper) {
  BoundCheck b;
  b.applicable = true;
  b.value = value;
  b.lower = lower;
  b.upper = upper;
  b.margin_low = value - lower;
  b.margin_high = upper - value;
  b.pass = value >= lower - tol_for(lower) && (upper == kInf || value <= upper + tol_for(upper));
  return b;
}

ComparisonConstants constants_unchecked(int d, int l) {
  const double dd = d, ll = l;
  const double D1 = dd * (ll - 1) - 1;       // d(l-1) - 1
  const double g = (dd - 1) * (ll - 1);       // (d-1)(l-1)
  const double sg = std::sqrt(g);
  const double sD1 = std::sqrt(D1);
  const double sl2 = std::sqrt(ll - 2);
  ComparisonConstants k;
  k.A = 2 * D1 / (2 * g + sl2 * sg * (sl2 + std::sqrt((ll - 6) + 4 * sg)));
  k.B = l == 2 ? 1.0 : (1 + std::sqrt(1 - 4 / g)) / (1 + std::sqrt(1 - 4 / D1));
  k.C = sD1 / sg;
  k.D = (2 * D1 + sl2 * sD1 * (sl2 + std::sqrt((ll + 2) + 4 * sD1))) / (2 * g);
  if (cases45_admissible(d, l)) {
    k.E = 2 * D1 / ((ll - 1) * (dd + std::sqrt(dd * dd - 4 * D1)));
    k.F = D1 / g * (2 * sD1 + (ll - 2) + sl2 * std::sqrt(ll + 2 + 4 * sD1)) /
          (2 * sD1 + 2 * (ll - 2) + 2 * sl2 * std::sqrt(ll - 2 + 2 * sD1));
  }
  return k;
}

// Each case is a list of quantities that must be >= 0.
std::vector<std::vector<double>> nbrw_case_margins(const SpectralSummary& s, int d, int l) {
  const double s2 = 2 * std::sqrt(static_cast<double>(d - 1) * (l - 1));
  const double t = 2 * std::sqrt(static_cast<double>(d) * (l - 1) - 1);
  const double a2 = std::abs(s.lambda2 - (l - 2));
  const double bn = (l - 2) - s.lambda_n;
  const double l2 = s.lambda2, ln = s.lambda_n;
  const bool pre45 = cases45_admissible(d, l);
  const double blocked = pre45 ? kInf : -kInf;
  return {
      {a2 - s2, a2 - bn},
      {ln + t, (l - 2 - s2) - ln, t - l2},
      {ln + t, (l - 2 - s2) - ln, l2 - t, (l - 2 + s2) - l2},
      {blocked, -t - ln, std::abs(ln) - std::abs(l2)},
      {blocked, -t - ln, std::abs(l2) - std::abs(ln), bn - a2},
  };
}

std::vector<std::vector<double>> simple_case_margins(const SpectralSummary& s, int d, int l) {
  const double s2 = 2 * std::sqrt(static_cast<double>(d - 1) * (l - 1));
  const double a2 = std::abs(s.lambda2 - (l - 2));
  const double bn = (l - 2) - s.lambda_n;
  const double l2 = std::abs(s.lambda2), ln = std::abs(s.lambda_n);
  return {
      {a2 - s2, a2 - bn},
      {bn - s2, bn - a2, ln - l2},
      {bn - s2, bn - a2, l2 - ln},
  };
}

CaseClassification pick_case(const std::vector<std::vector<double>>& cases, double scale) {
  const double tol = tol_for(scale);
  CaseClassification out;
  int matches = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const double worst = *std::min_element(cases[i].begin(), cases[i].end());
    if (worst < -tol) continue;
    ++matches;
    if (out.label == CaseLabel::Unclassified) {
      out.label = static_cast<CaseLabel>(i);
      out.on_boundary = worst <= tol;
    }
  }
  if (matches > 1) out.on_boundary = true;
  return out;
}

void require_comparison_hypotheses(const SpectralSummary& s, int d, int l) {
  if (d < 3 || d < l) throw Error(Errc::HypothesisViolation, "case split needs d >= l and d >= 3");
  const double s2 = 2 * std::sqrt(static_cast<double>(d - 1) * (l - 1));
  if (lambda_at_zero(s, l) < s2 - tol_for(s2))
    throw Error(Errc::HypothesisViolation, "lambda < 2 sqrt((d-1)(l-1)); use the finite bounds instead");
}

}  // namespace

double psi(double x) {
  if (std::isnan(x) || x < 0) throw Error(Errc::NegativeInput, "psi needs x >= 0");
  if (x <= 1.0) return 1.0;
  return x + std::sqrt((x - 1.0) * (x + 1.0));
}

double delta_from_epsilon(double eps, int d) {
  if (d < 2) throw Error(Errc::OutOfRange, "delta needs d >= 2");
  if (!(eps >= 0.0)) throw Error(Errc::OutOfRange, "eps must be >= 0");
  const double ed = eps * d;
  if (ed > 1.0 + 1e-12) throw Error(Errc::OutOfRange, "eps exceeds 1/d");
  if (ed >= 1.0 - 1e-14) return 1.0;
  return eps * (d - 1) / (1.0 - eps);
}

WalkParams walk_params(double eps, int d, int l) {
  if (l < 2) throw Error(Errc::OutOfRange, "need l >= 2");
  WalkParams w;
  w.delta = delta_from_epsilon(eps, d);
  w.epsilon = std::min(eps, 1.0 / d);
  w.d = d;
  w.l = l;
  w.p_stay = w.epsilon / (l - 1);
  w.p_leave = (1.0 - w.epsilon) / ((d - 1.0) * (l - 1));
  return w;
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::LeqRegime: return "LeqRegime";
    case Regime::GtRegime: return "GtRegime";
    case Regime::SimpleWalkLimit: return "SimpleWalkLimit";
    case Regime::OutsideHypotheses: return "OutsideHypotheses";
  }
  return "?";
}

Regime regime_for(int d, int l, double delta) {
  if (d < 2 || l < 2 || delta < 0.0 || delta > 1.0) return Regime::OutsideHypotheses;
  if (delta > kSimpleWalkDelta) return Regime::SimpleWalkLimit;
  if (l * (1.0 - delta) > d) return Regime::GtRegime;
  if (d >= 3 || delta > 0.0) return Regime::LeqRegime;
  return Regime::OutsideHypotheses;
}

CliqueWalkRate mixing_rate_clique_walk_delta(const SpectralSummary& s, int d, int l, double delta) {
  if (s.d != d || s.l != l) throw Error(Errc::InvalidParams, "summary computed for different (d,l)");
  if (std::abs(s.delta - delta) > 1e-12) throw Error(Errc::InvalidParams, "summary computed at a different delta");
  require_theory_flags(s);
  CliqueWalkRate out;
  out.regime = regime_for(d, l, delta);
  switch (out.regime) {
    case Regime::OutsideHypotheses:
      break;
    case Regime::SimpleWalkLimit:
      out.rho_tilde = s.lambda_prime / (static_cast<double>(d) * (l - 1));
      break;
    case Regime::LeqRegime:
    case Regime::GtRegime: {
      const double lam = out.regime == Regime::LeqRegime ? s.lambda : s.lambda_hat;
      const double b = (l - 1) * (1.0 - delta) * (d - 1 + delta);
      const double pre = std::sqrt((1.0 - delta) / ((d - 1 + delta) * (l - 1)));
      out.rho_tilde = pre * psi(lam / (2.0 * std::sqrt(b)));
      break;
    }
  }
  return out;
}

CliqueWalkRate mixing_rate_clique_walk(const SpectralSummary& s, int d, int l, double eps) {
  return mixing_rate_clique_walk_delta(s, d, l, delta_from_epsilon(eps, d));
}

double mixing_rate_simple(const SpectralSummary& s, int d, int l) {
  require_theory_flags(s);
  return s.lambda_prime / (static_cast<double>(d) * (l - 1));
}

double mixing_rate_nbrw(const SpectralSummary& s, int d, int l) {
  require_theory_flags(s);
  const double deg = static_cast<double>(d) * (l - 1);
  if (deg <= 2) throw Error(Errc::DegreeTooSmall, "non-backtracking rate needs degree >= 3");
  const double r = std::sqrt(deg - 1);
  return psi(s.lambda_prime / (2 * r)) / r;
}

bool cases45_admissible(int d, int l) {
  return 4LL * d * l <= static_cast<long long>(d + 2) * (d + 2);
}

ComparisonConstants comparison_constants(int d, int l) {
  if (l < 2 || d < l) throw Error(Errc::HypothesisViolation, "constants need d >= l >= 2");
  return constants_unchecked(d, l);
}

std::string_view case_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::Case1: return "Case1";
    case CaseLabel::Case2: return "Case2";
    case CaseLabel::Case3: return "Case3";
    case CaseLabel::Case4: return "Case4";
    case CaseLabel::Case5: return "Case5";
    case CaseLabel::Unclassified: return "Unclassified";
  }
  return "?";
}

CaseClassification classify_case(const SpectralSummary& s, int d, int l) {
  require_comparison_hypotheses(s, d, l);
  return pick_case(nbrw_case_margins(s, d, l), static_cast<double>(d) * (l - 1));
}

CaseClassification classify_simple_case(const SpectralSummary& s, int d, int l) {
  require_comparison_hypotheses(s, d, l);
  return pick_case(simple_case_margins(s, d, l), static_cast<double>(d) * (l - 1));
}

Interval case_ratio_bounds(CaseLabel c, const ComparisonConstants& k) {
  switch (c) {
    case CaseLabel::Case1: return {k.A, k.B};
    case CaseLabel::Case2: return {k.C, k.D};
    case CaseLabel::Case3: return {k.A, k.D};
    case CaseLabel::Case4:
      if (k.E) return {*k.E, k.D};
      break;
    case CaseLabel::Case5:
      if (k.F) return {*k.F, k.D};
      break;
    case CaseLabel::Unclassified:
      break;
  }
  throw Error(Errc::HypothesisViolation, "no ratio bounds for " + std::string(case_name(c)));
}

double simple_case_lower_bound(CaseLabel c, int d, int l) {
  const double dd = d, ll = l;
  const double s2 = 2 * std::sqrt((dd - 1) * (ll - 1));
  const double base = dd / (2 * (dd - 1));
  switch (c) {
    case CaseLabel::Case1: return base - dd * (ll - 2) / (2 * (dd - 1) * (s2 + (ll - 2)));
    case CaseLabel::Case2: return base + (ll - 2) / (2 * (dd - 1));
    case CaseLabel::Case3: return base - dd * (ll - 2) / (2 * (dd - 1) * (s2 - (ll - 2)));
    default: break;
  }
  throw Error(Errc::HypothesisViolation, "no simple-walk bound for " + std::string(case_name(c)));
}

namespace {

template <typename SummaryAt>
MixingReport build_report(SummaryAt summary_at, int d, int l, double eps) {
  MixingReport r;
  r.epsilon = eps;
  r.delta = delta_from_epsilon(eps, d);
  r.d = d;
  r.l = l;
  r.summary = summary_at(r.delta);
  r.summary_zero = r.delta == 0.0 ? r.summary : summary_at(0.0);

  const CliqueWalkRate rate = mixing_rate_clique_walk_delta(r.summary, d, l, r.delta);
  r.regime = rate.regime;
  r.rho_tilde = rate.rho_tilde;
  r.rho_simple = mixing_rate_simple(r.summary, d, l);
  if (static_cast<long long>(d) * (l - 1) >= 3)
    r.rho_nbrw = mixing_rate_nbrw(r.summary, d, l);
  else
    r.notes.push_back("non-backtracking rate undefined for degree <= 2");
  if (!r.rho_tilde) {
    r.notes.push_back("parameters outside both branches of the rate formula");
    return r;
  }
  r.margin = 1.0 - *r.rho_tilde;
  if (*r.rho_simple > 0) r.ratio_simple = *r.rho_tilde / *r.rho_simple;
  if (r.rho_nbrw) r.ratio_nbrw = *r.rho_tilde / *r.rho_nbrw;

  if (r.delta != 0.0) return r;
  const double s2 = 2 * std::sqrt(static_cast<double>(d - 1) * (l - 1));
  const double lam0 = lambda_at_zero(r.summary_zero, l);
  if (lam0 <= s2 + tol_for(s2)) r.small_lambda_applicable = true;
  if (d >= 3 && d >= l) {
    r.constants = comparison_constants(d, l);
    if (lam0 >= s2 - tol_for(s2)) {
      r.case_label = classify_case(r.summary_zero, d, l);
      r.simple_case = classify_simple_case(r.summary_zero, d, l);
      if (r.case_label->on_boundary) r.notes.push_back("case label decided on an interval endpoint");
    }
  }
  return r;
}

}  // namespace

MixingReport mixing_report(const Spectrum& spec, int d, int l, double eps) {
  return build_report([&](double delta) { return spectral_summary(spec, d, l, delta); }, d, l, eps);
}

MixingReport mixing_report_from_values(double lambda2, double lambda_n, int d, int l, double eps) {
  return build_report(
      [&](double delta) { return spectral_summary_from_values(lambda2, lambda_n, d, l, delta); }, d, l, eps);
}

CaseBoundCheck check_case_bounds(const MixingReport& report) {
  CaseBoundCheck out;
  if (!report.case_label || !report.constants || !report.ratio_nbrw) return out;
  out.label = report.case_label->label;
  if (out.label == CaseLabel::Unclassified) return out;
  const Interval iv = case_ratio_bounds(out.label, *report.constants);
  out.nbrw_ratio = make_check(*report.ratio_nbrw, iv.lower, iv.upper);
  out.pass = out.nbrw_ratio.pass;
  if (report.simple_case && report.simple_case->label != CaseLabel::Unclassified && report.ratio_simple) {
    const double lo = simple_case_lower_bound(report.simple_case->label, report.d, report.l);
    out.simple_ratio = make_check(*report.ratio_simple, lo, kInf);
    out.below_simple = *report.rho_tilde < *report.rho_simple;
    out.pass = out.pass && out.simple_ratio.pass && *out.below_simple;
  }
  return out;
}

SmallLambdaCheck small_lambda_bounds(const SpectralSummary& s, int d, int l) {
  if (s.delta != 0.0) throw Error(Errc::HypothesisViolation, "finite bounds need the delta = 0 summary");
  const double g = static_cast<double>(d - 1) * (l - 1);
  const double s2 = 2 * std::sqrt(g);
  if (lambda_at_zero(s, l) > s2 + tol_for(s2))
    throw Error(Errc::HypothesisViolation, "lambda > 2 sqrt((d-1)(l-1))");
  // accepted as on the threshold, so evaluate there; psi has infinite slope at 1
  SpectralSummary at = s;
  at.lambda = std::min(at.lambda, s2);
  const CliqueWalkRate rate = mixing_rate_clique_walk_delta(at, d, l, 0.0);
  if (!rate.rho_tilde) throw Error(Errc::HypothesisViolation, "instance outside the rate formula at eps = 0");
  const double rho = mixing_rate_simple(s, d, l);
  const double rho_nb = mixing_rate_nbrw(s, d, l);
  const ComparisonConstants k = constants_unchecked(d, l);
  SmallLambdaCheck c;
  const double lo = static_cast<double>(d) * (l - 1) / (2 * g + (l - 2) * std::sqrt(g));
  c.simple_ratio = make_check(*rate.rho_tilde / rho, lo, kInf);
  c.nbrw_ratio = make_check(*rate.rho_tilde / rho_nb, k.A, k.C);
  c.pass = c.simple_ratio.pass && c.nbrw_ratio.pass;
  return c;
}

std::vector<double> pg_spectrum(const PartialGeometryParams& p) {
  if (p.K < 2 || p.R < 2 || p.T < 1 || p.T > std::min(p.K, p.R))
    throw Error(Errc::InvalidParams, "pg(K,R,T) needs K >= 2, R >= 2, 1 <= T <= min(K,R)");
  return {static_cast<double>(p.R) * (p.K - 1), static_cast<double>(p.K - 1 - p.T), -static_cast<double>(p.R)};
}

std::string_view comparison_name(Comparison c) {
  switch (c) {
    case Comparison::Slower: return "slower";
    case Comparison::Faster: return "faster";
    case Comparison::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

Comparison observe(double ratio) {
  if (ratio > 1.0) return Comparison::Slower;
  if (ratio < 1.0) return Comparison::Faster;
  return Comparison::Undetermined;
}

}  // namespace

PgReport pg_mixing_report(const PartialGeometryParams& p) {
  PgReport out;
  out.params = p;
  out.spectrum = pg_spectrum(p);
  if (p.K == 2) throw Error(Errc::InvalidParams, "K = 2 gives a bipartite point graph");
  if (p.T == p.K) throw Error(Errc::InvalidParams, "T = K gives a complete point graph");
  out.report = mixing_report_from_values(out.spectrum[1], out.spectrum[2], p.R, p.K, 0.0);
  const double K = p.K, R = p.R;
  if (p.R >= p.K) {
    out.rho_tilde_closed = 1.0 / (K - 1);
    out.predicted = Comparison::Slower;
  } else {
    out.rho_tilde_closed = 1.0 / std::sqrt((K - 1) * (R - 1));
    if (R >= (K - 3) / 4 + 5 / (4 * (K - 1)))
      out.predicted = Comparison::Slower;
    else if (p.T == 1 && R <= K / 4 - 1)
      out.predicted = Comparison::Faster;
  }
  if (out.report.ratio_nbrw) out.observed = observe(*out.report.ratio_nbrw);
  return out;
}

LatinCrossoverReport latin_crossover_report(int l) {
  if (l <= 3) throw Error(Errc::InvalidParams, "Latin crossover needs l > 3");
  const PgReport pg = pg_mixing_report({l, 3, 2});
  LatinCrossoverReport out;
  out.l = l;
  out.rho_tilde = *pg.report.rho_tilde;
  out.rho_nbrw = *pg.report.rho_nbrw;
  out.ratio = out.rho_tilde / out.rho_nbrw;
  const double ll = l;
  out.rho_tilde_closed = 1.0 / std::sqrt(2 * ll - 2);
  if (ll <= 9 + 2 * std::sqrt(14.0))
    out.rho_nbrw_closed = 1.0 / std::sqrt(3 * ll - 4);
  else
    out.rho_nbrw_closed = (ll - 3 + std::sqrt(ll * ll - 18 * ll + 25)) / (6 * ll - 8);
  out.asymptotic_ratio = 3.0 / std::sqrt(2 * ll);
  out.observed = observe(out.ratio);
  return out;
}

double exceptional_point(int d, int l, double delta) {
  return -(d + (l - 2) * (1.0 - delta)) / (2.0 * std::sqrt((l - 1) * (1.0 - delta) * (d - 1 + delta)));
}

bool is_exceptional_point(double y, int d, int l, double delta) {
  const double y0 = exceptional_point(d, l, delta);
  return std::abs(y - y0) <= 1e-12 * std::abs(y0);
}

double qk_growth_rate_closed_form(double y, int d, int l, double delta) {
  if (d < 2 || l < 2 || !(delta >= 0.0 && delta < 1.0))
    throw Error(Errc::HypothesisViolation, "growth formula needs d >= 2, l >= 2, delta in [0,1)");
  const bool greater = l * (1.0 - delta) > d;
  if (!greater && d + delta <= 2.0)
    throw Error(Errc::HypothesisViolation, "l(1-delta) <= d branch needs d - 2 + delta > 0");
  if (greater && is_exceptional_point(y, d, l, delta))
    return std::sqrt((d - 1 + delta) / ((l - 1) * (1.0 - delta)));
  const double a = std::abs(y);
  if (a <= 1.0) return 1.0;
  return a + std::sqrt((a - 1.0) * (a + 1.0));
}

}  // namespace cliquewalk
