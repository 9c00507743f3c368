#include "cliquewalk/report_json.hpp"

#include <charconv>
#include <cmath>

#include "cliquewalk/error.hpp"
#include "cliquewalk/graph_io.hpp"

namespace cliquewalk {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

// nan/inf are not JSON numbers
json num(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json provenance_json(const CliqueRegularGraph* crg, std::optional<std::uint64_t> seed) {
  return {{"graph_hash", crg ? json(graph_hash_hex(*crg)) : json(nullptr)},
          {"seed", opt(seed)},
          {"tool_version", kToolVersion}};
}

json to_json(const SpectralSummary& s) {
  return {{"lambda1", s.lambda1},
          {"lambda2", s.lambda2},
          {"lambda_n", s.lambda_n},
          {"lambda_prime", s.lambda_prime},
          {"lambda", s.lambda},
          {"lambda_hat", s.lambda_hat},
          {"has_minus_d", s.has_minus_d},
          {"delta", s.delta},
          {"d", s.d},
          {"l", s.l},
          {"connected", s.connected},
          {"bipartite", s.bipartite},
          {"complete", s.complete}};
}

SpectralSummary spectral_summary_from_json(const json& j) {
  SpectralSummary s;
  s.lambda1 = j.at("lambda1").get<double>();
  s.lambda2 = j.at("lambda2").get<double>();
  s.lambda_n = j.at("lambda_n").get<double>();
  s.lambda_prime = j.at("lambda_prime").get<double>();
  s.lambda = j.at("lambda").get<double>();
  s.lambda_hat = j.at("lambda_hat").get<double>();
  s.has_minus_d = j.at("has_minus_d").get<bool>();
  s.delta = j.at("delta").get<double>();
  s.d = j.at("d").get<int>();
  s.l = j.at("l").get<int>();
  s.connected = j.at("connected").get<bool>();
  s.bipartite = j.at("bipartite").get<bool>();
  s.complete = j.at("complete").get<bool>();
  return s;
}

json to_json(const ComparisonConstants& k) {
  return {{"A", k.A}, {"B", k.B}, {"C", k.C}, {"D", k.D}, {"E", opt(k.E)}, {"F", opt(k.F)}};
}

ComparisonConstants comparison_constants_from_json(const json& j) {
  ComparisonConstants k;
  k.A = j.at("A").get<double>();
  k.B = j.at("B").get<double>();
  k.C = j.at("C").get<double>();
  k.D = j.at("D").get<double>();
  k.E = opt_from<double>(j, "E");
  k.F = opt_from<double>(j, "F");
  return k;
}

json to_json(const CaseClassification& c) {
  return {{"label", std::string(case_name(c.label))}, {"on_boundary", c.on_boundary}};
}

CaseClassification case_classification_from_json(const json& j) {
  return {case_label_from_name(j.at("label").get<std::string>()), j.at("on_boundary").get<bool>()};
}

Regime regime_from_name(const std::string& name) {
  for (Regime r : {Regime::LeqRegime, Regime::GtRegime, Regime::SimpleWalkLimit, Regime::OutsideHypotheses})
    if (regime_name(r) == name) return r;
  throw Error(Errc::MalformedGraph, "unknown regime '" + name + "'");
}

CaseLabel case_label_from_name(const std::string& name) {
  for (CaseLabel c : {CaseLabel::Case1, CaseLabel::Case2, CaseLabel::Case3, CaseLabel::Case4, CaseLabel::Case5,
                      CaseLabel::Unclassified})
    if (case_name(c) == name) return c;
  throw Error(Errc::MalformedGraph, "unknown case label '" + name + "'");
}

json to_json(const MixingReport& r) {
  json j = {{"epsilon", r.epsilon},
            {"delta", r.delta},
            {"d", r.d},
            {"l", r.l},
            {"summary", to_json(r.summary)},
            {"summary_zero", to_json(r.summary_zero)},
            {"regime", std::string(regime_name(r.regime))},
            {"rho_tilde", opt(r.rho_tilde)},
            {"rho_simple", opt(r.rho_simple)},
            {"rho_nbrw", opt(r.rho_nbrw)},
            {"ratio_simple", opt(r.ratio_simple)},
            {"ratio_nbrw", opt(r.ratio_nbrw)},
            {"margin", opt(r.margin)},
            {"small_lambda_applicable", r.small_lambda_applicable},
            {"notes", r.notes}};
  j["case_label"] = r.case_label ? to_json(*r.case_label) : json(nullptr);
  j["simple_case"] = r.simple_case ? to_json(*r.simple_case) : json(nullptr);
  j["constants"] = r.constants ? to_json(*r.constants) : json(nullptr);
  return j;
}

MixingReport mixing_report_from_json(const json& j) {
  try {
    MixingReport r;
    r.epsilon = j.at("epsilon").get<double>();
    r.delta = j.at("delta").get<double>();
    r.d = j.at("d").get<int>();
    r.l = j.at("l").get<int>();
    r.summary = spectral_summary_from_json(j.at("summary"));
    r.summary_zero = spectral_summary_from_json(j.at("summary_zero"));
    r.regime = regime_from_name(j.at("regime").get<std::string>());
    r.rho_tilde = opt_from<double>(j, "rho_tilde");
    r.rho_simple = opt_from<double>(j, "rho_simple");
    r.rho_nbrw = opt_from<double>(j, "rho_nbrw");
    r.ratio_simple = opt_from<double>(j, "ratio_simple");
    r.ratio_nbrw = opt_from<double>(j, "ratio_nbrw");
    r.margin = opt_from<double>(j, "margin");
    if (!j.at("case_label").is_null()) r.case_label = case_classification_from_json(j.at("case_label"));
    if (!j.at("simple_case").is_null()) r.simple_case = case_classification_from_json(j.at("simple_case"));
    if (!j.at("constants").is_null()) r.constants = comparison_constants_from_json(j.at("constants"));
    r.small_lambda_applicable = j.at("small_lambda_applicable").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::MalformedGraph, std::string("bad report document: ") + e.what());
  }
}

json to_json(const BoundCheck& b) {
  return {{"applicable", b.applicable}, {"pass", b.pass},           {"value", num(b.value)},
          {"lower", num(b.lower)},      {"upper", num(b.upper)},     {"margin_low", num(b.margin_low)},
          {"margin_high", num(b.margin_high)}};
}

json to_json(const CaseBoundCheck& c) {
  return {{"label", std::string(case_name(c.label))},
          {"nbrw_ratio", to_json(c.nbrw_ratio)},
          {"simple_ratio", to_json(c.simple_ratio)},
          {"below_simple", opt(c.below_simple)},
          {"pass", c.pass}};
}

json to_json(const SmallLambdaCheck& c) {
  return {{"simple_ratio", to_json(c.simple_ratio)}, {"nbrw_ratio", to_json(c.nbrw_ratio)}, {"pass", c.pass}};
}

json to_json(const PgReport& p) {
  return {{"K", p.params.K},
          {"R", p.params.R},
          {"T", p.params.T},
          {"spectrum", p.spectrum},
          {"report", to_json(p.report)},
          {"rho_tilde_closed", p.rho_tilde_closed},
          {"predicted", std::string(comparison_name(p.predicted))},
          {"observed", std::string(comparison_name(p.observed))}};
}

json to_json(const LatinCrossoverReport& r) {
  return {{"l", r.l},
          {"rho_tilde", r.rho_tilde},
          {"rho_nbrw", r.rho_nbrw},
          {"ratio", r.ratio},
          {"rho_tilde_closed", r.rho_tilde_closed},
          {"rho_nbrw_closed", r.rho_nbrw_closed},
          {"asymptotic_ratio", r.asymptotic_ratio},
          {"observed", std::string(comparison_name(r.observed))}};
}

json to_json(const MonteCarloResult& m) {
  return {{"start", m.start},       {"k", m.k},
          {"trials", m.trials},     {"seed", m.seed},
          {"counts", m.counts},     {"probability", m.probability},
          {"std_error", m.std_error}};
}

json to_json(const RateFit& f) {
  return {{"rate", num(f.rate)},           {"slope", num(f.slope)},       {"intercept", num(f.intercept)},
          {"r_squared", num(f.r_squared)}, {"window", f.window},          {"fit_from", f.fit_from},
          {"fit_to", f.fit_to}};
}

}  // namespace cliquewalk
