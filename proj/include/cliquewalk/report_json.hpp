#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "cliquewalk/graph.hpp"
#include "cliquewalk/mixing_theory.hpp"
#include "cliquewalk/walk_engine.hpp"

namespace cliquewalk {

inline constexpr const char* kToolVersion = "0.1.0";

// Shortest decimal that reads back to the same double, '.' separator, no locale.
std::string format_number(double x);

nlohmann::json provenance_json(const CliqueRegularGraph* crg, std::optional<std::uint64_t> seed);

nlohmann::json to_json(const SpectralSummary& s);
SpectralSummary spectral_summary_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ComparisonConstants& k);
ComparisonConstants comparison_constants_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CaseClassification& c);
CaseClassification case_classification_from_json(const nlohmann::json& j);

// Exact inverse of mixing_report_from_json.
nlohmann::json to_json(const MixingReport& r);
MixingReport mixing_report_from_json(const nlohmann::json& j);

Regime regime_from_name(const std::string& name);
CaseLabel case_label_from_name(const std::string& name);

nlohmann::json to_json(const BoundCheck& b);
nlohmann::json to_json(const CaseBoundCheck& c);
nlohmann::json to_json(const SmallLambdaCheck& c);
nlohmann::json to_json(const PgReport& p);
nlohmann::json to_json(const LatinCrossoverReport& r);
nlohmann::json to_json(const MonteCarloResult& m);
nlohmann::json to_json(const RateFit& f);

}  // namespace cliquewalk
