#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cliquewalk/error.hpp"
#include "cliquewalk/generators.hpp"
#include "cliquewalk/mixing_theory.hpp"
#include "cliquewalk/spectrum.hpp"
#include "support.hpp"

using namespace cliquewalk;

namespace {

SpectralSummary summary_of(const CliqueRegularGraph& g, double delta) {
  return spectral_summary(eigenvalues_symmetric(g.adjacency()), g.d(), g.l(), delta);
}

MixingReport report_of(const CliqueRegularGraph& g, double eps) {
  return mixing_report(eigenvalues_symmetric(g.adjacency()), g.d(), g.l(), eps);
}

}  // namespace

TEST_CASE("psi") {
  CHECK(psi(0) == 1);
  CHECK(psi(0.5) == 1);
  CHECK(psi(1) == 1);
  CHECK(psi(1.25) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(psi(1 + 1e-12) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(error_of([] { psi(-0.1); }) == Errc::NegativeInput);
  CHECK(error_of([] { psi(std::nan("")); }) == Errc::NegativeInput);
  double prev = 1;
  for (double x = 0; x < 5; x += 0.01) {
    const double p = psi(x);
    CHECK(p >= prev);
    CHECK(p >= std::max(1.0, x));
    prev = p;
  }
}

TEST_CASE("delta and walk parameters") {
  CHECK(delta_from_epsilon(0, 3) == 0);
  CHECK(delta_from_epsilon(1.0 / 3, 3) == 1);
  CHECK(delta_from_epsilon(0.1, 3) == doctest::Approx(0.2 / 0.9));
  CHECK(error_of([] { delta_from_epsilon(0.4, 3); }) == Errc::OutOfRange);
  CHECK(error_of([] { delta_from_epsilon(-0.1, 3); }) == Errc::OutOfRange);
  CHECK(error_of([] { delta_from_epsilon(0.1, 1); }) == Errc::OutOfRange);
  double prev = -1;
  for (int i = 0; i <= 50; ++i) {
    const double eps = 0.25 * i / 50;
    const WalkParams w = walk_params(eps, 4, 5);
    CHECK(w.delta > prev);
    prev = w.delta;
    CHECK(w.p_stay * 4 + w.p_leave * 3 * 4 == doctest::Approx(1.0).epsilon(1e-14));
    if (i < 50) CHECK(w.p_stay / w.p_leave == doctest::Approx(w.delta).epsilon(1e-12));
  }
}

TEST_CASE("regimes") {
  CHECK(regime_for(3, 2, 0) == Regime::LeqRegime);
  CHECK(regime_for(3, 5, 0) == Regime::GtRegime);
  CHECK(regime_for(3, 5, 0.5) == Regime::LeqRegime);
  CHECK(regime_for(2, 2, 0) == Regime::OutsideHypotheses);
  CHECK(regime_for(2, 2, 0.3) == Regime::LeqRegime);
  CHECK(regime_for(2, 4, 0) == Regime::GtRegime);
  CHECK(regime_for(3, 4, 1) == Regime::SimpleWalkLimit);
}

TEST_CASE("clique walk rates") {
  SUBCASE("petersen") {
    const auto r = mixing_rate_clique_walk(summary_of(petersen(), 0), 3, 2, 0);
    CHECK(r.regime == Regime::LeqRegime);
    CHECK(*r.rho_tilde == doctest::Approx(1 / std::sqrt(2.0)));
    const auto s = summary_of(petersen(), 0);
    CHECK(mixing_rate_simple(s, 3, 2) == doctest::Approx(2.0 / 3));
    CHECK(mixing_rate_nbrw(s, 3, 2) == doctest::Approx(1 / std::sqrt(2.0)));
  }
  SUBCASE("Latin square of order 5") {
    const auto g = latin_square_graph(latin_square_cyclic(5));
    const auto s = summary_of(g, 0);
    const auto r = mixing_rate_clique_walk(s, 3, 5, 0);
    CHECK(r.regime == Regime::GtRegime);
    CHECK(*r.rho_tilde == doctest::Approx(1 / std::sqrt(8.0)));
    CHECK(mixing_rate_nbrw(s, 3, 5) == doctest::Approx(1 / std::sqrt(11.0)));
  }
  SUBCASE("rook 4") {
    CHECK(mixing_rate_simple(summary_of(rook_graph(4), 0), 2, 4) == doctest::Approx(1.0 / 3));
  }
  SUBCASE("net of three squares of order 7") {
    // 5 parallel classes: l(1) = 7 > 5; only lambda2 = 2 survives in lambda_hat, |2 - 5| = 3 < 2 sqrt(24)
    const auto g = ols_graph(mols_prime(7, 3));
    const auto r = mixing_rate_clique_walk(summary_of(g, 0), 5, 7, 0);
    CHECK(r.regime == Regime::GtRegime);
    CHECK(*r.rho_tilde == doctest::Approx(1 / std::sqrt(24.0)));
  }
  SUBCASE("simple walk end") {
    for (const auto& g : {petersen(), rook_graph(4), latin_square_graph(latin_square_cyclic(5))}) {
      const double eps = 1.0 / g.d();
      const auto s = summary_of(g, delta_from_epsilon(eps, g.d()));
      const auto r = mixing_rate_clique_walk(s, g.d(), g.l(), eps);
      CHECK(r.regime == Regime::SimpleWalkLimit);
      CHECK(*r.rho_tilde == doctest::Approx(s.lambda_prime / g.degree()));
    }
  }
  SUBCASE("hypotheses") {
    CHECK(error_of([] { mixing_rate_clique_walk(summary_of(prism(4), 0), 3, 2, 0); }) == Errc::BipartiteGraph);
    const auto c5 = mixing_rate_clique_walk(summary_of(cycle(5), 0), 2, 2, 0);
    CHECK(c5.regime == Regime::OutsideHypotheses);
    CHECK_FALSE(c5.rho_tilde.has_value());
    CHECK(error_of([] { mixing_rate_nbrw(summary_of(cycle(5), 0), 2, 2); }) == Errc::DegreeTooSmall);
    const auto s = summary_of(petersen(), 0);
    CHECK(error_of([&] { mixing_rate_clique_walk(s, 3, 2, 0.1); }) == Errc::InvalidParams);
    CHECK(error_of([&] { mixing_rate_clique_walk(s, 4, 2, 0); }) == Errc::InvalidParams);
  }
}

TEST_CASE("regime boundary") {
  // l(1 - delta) = d at delta = 1/3 for d = 2, l = 3; no eigenvalue at -d
  const double delta = 1.0 / 3;
  const auto s = spectral_summary_from_values(1.5, -1.2, 2, 3, delta);
  CHECK_FALSE(s.has_minus_d);
  CHECK(s.lambda == doctest::Approx(s.lambda_hat).epsilon(1e-15));
  const double at = *mixing_rate_clique_walk_delta(s, 2, 3, delta).rho_tilde;
  const double below = delta - 1e-9;
  const auto g = mixing_rate_clique_walk_delta(spectral_summary_from_values(1.5, -1.2, 2, 3, below), 2, 3, below);
  CHECK(g.regime == Regime::GtRegime);
  CHECK(*g.rho_tilde == doctest::Approx(at).epsilon(1e-7));
}

TEST_CASE("rate is continuous in eps and below 1") {
  for (const auto& g : {petersen(), rook_graph(4), latin_square_graph(latin_square_cyclic(5)), prism(7)}) {
    const Spectrum spec = eigenvalues_symmetric(g.adjacency());
    const int d = g.d(), l = g.l();
    std::vector<double> rho;
    for (int i = 0; i < 100; ++i) {
      const double eps = (1.0 / d) * i / 99;
      const auto r = mixing_report(spec, d, l, eps);
      REQUIRE(r.rho_tilde.has_value());
      CHECK(*r.rho_tilde < 1);
      CHECK(*r.rho_tilde > 0);
      rho.push_back(*r.rho_tilde);
    }
    std::vector<double> diffs;
    for (std::size_t i = 1; i < rho.size(); ++i) diffs.push_back(std::abs(rho[i] - rho[i - 1]));
    auto sorted = diffs;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    const double median = sorted[sorted.size() / 2];
    // A step above 10x the median is either a jump or the square-root cusp where
    // psi leaves its flat branch. Shrinking the step separates the two.
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      if (diffs[i] <= 10 * median) continue;
      const double a = (1.0 / d) * i / 99, h = (1.0 / d) / 99;
      double worst = 0;
      for (int j = 0; j < 1024; ++j) {
        const double x = a + h * j / 1024, y = a + h * (j + 1) / 1024;
        const double rx = *mixing_report(spec, d, l, x).rho_tilde, ry = *mixing_report(spec, d, l, y).rho_tilde;
        worst = std::max(worst, std::abs(rx - ry));
      }
      // continuous with at worst a square-root cusp: steps shrink like sqrt(1/1024)
      CHECK(worst <= diffs[i] / 16);
    }

    const auto near = mixing_report(spec, d, l, 1.0 / d - 1e-6);
    const auto s = spectral_summary(spec, d, l, 0);
    CHECK(std::abs(*near.rho_tilde - s.lambda_prime / g.degree()) <= 1e-3);
  }
}

TEST_CASE("comparison constants") {
  for (int d : {3, 8, 15}) {
    const auto k = comparison_constants(d, 2);
    CHECK(k.A == doctest::Approx(1).epsilon(1e-15));
    CHECK(k.B == 1);
    CHECK(k.C == doctest::Approx(1).epsilon(1e-15));
    CHECK(k.D == doctest::Approx(1).epsilon(1e-15));
    REQUIRE(k.E.has_value());
    CHECK(*k.E == doctest::Approx(1).epsilon(1e-15));
    CHECK(*k.F == doctest::Approx(1).epsilon(1e-15));
  }
  const auto k = comparison_constants(9, 3);
  REQUIRE(k.E.has_value());
  REQUIRE(k.F.has_value());
  CHECK(k.A <= *k.F);
  CHECK(*k.F <= k.B);
  CHECK(k.B <= 1);
  CHECK(1 <= k.C);
  CHECK(k.C <= *k.E);
  CHECK(*k.E <= k.D);
  CHECK(cases45_admissible(9, 3));
  CHECK_FALSE(cases45_admissible(9, 4));
  CHECK_FALSE(comparison_constants(9, 4).E.has_value());
  CHECK(error_of([] { comparison_constants(3, 4); }) == Errc::HypothesisViolation);
}

TEST_CASE("case classification") {
  SUBCASE("odd prism") {
    const auto r = report_of(prism(17), 0);
    REQUIRE(r.case_label.has_value());
    CHECK(r.case_label->label == CaseLabel::Case4);
    const auto c = check_case_bounds(r);
    CHECK(c.pass);
    REQUIRE(c.below_simple.has_value());
    CHECK(*c.below_simple);
  }
  SUBCASE("tie between cases 2 and 4") {
    const double t = 2 * std::sqrt(3.0);
    const auto s = spectral_summary_from_values(1, -t, 4, 2, 0);
    const auto c = classify_case(s, 4, 2);
    CHECK(c.label == CaseLabel::Case2);
    CHECK(c.on_boundary);
  }
  SUBCASE("case 4 with d = 4") {
    const auto s = spectral_summary_from_values(1, -3.6, 4, 2, 0);
    CHECK(classify_case(s, 4, 2).label == CaseLabel::Case4);
    CHECK(check_case_bounds(mixing_report_from_values(1, -3.6, 4, 2, 0)).pass);
  }
  SUBCASE("case 1") {
    const auto s = spectral_summary_from_values(3.6, -1, 4, 2, 0);
    CHECK(classify_case(s, 4, 2).label == CaseLabel::Case1);
    CHECK(classify_simple_case(s, 4, 2).label == CaseLabel::Case1);
  }
  SUBCASE("small lambda is refused") {
    const auto s = summary_of(petersen(), 0);
    CHECK(error_of([&] { classify_case(s, 3, 2); }) == Errc::HypothesisViolation);
  }
  SUBCASE("l = 2 lower bound") {
    for (int d : {3, 5, 9}) CHECK(simple_case_lower_bound(CaseLabel::Case1, d, 2) == doctest::Approx(d / (2.0 * (d - 1))));
  }
}

TEST_CASE("small lambda bounds") {
  const auto s = summary_of(petersen(), 0);
  const auto c = small_lambda_bounds(s, 3, 2);
  CHECK(c.pass);
  CHECK(c.simple_ratio.value == doctest::Approx((1 / std::sqrt(2.0)) / (2.0 / 3)));
  CHECK(c.simple_ratio.lower == doctest::Approx(0.75));
  CHECK(c.nbrw_ratio.value == doctest::Approx(1));

  const auto g = random_regular(50, 4, 7);
  const auto r = report_of(g, 0);
  if (r.small_lambda_applicable && g.flags().connected && !g.flags().bipartite)
    CHECK(small_lambda_bounds(r.summary_zero, 4, 2).pass);

  CHECK(error_of([] { small_lambda_bounds(summary_of(prism(17), 0), 3, 2); }) == Errc::HypothesisViolation);
}

TEST_CASE("partial geometries") {
  CHECK(pg_spectrum({12, 2, 1}) == std::vector<double>{22, 10, -2});
  CHECK(pg_spectrum({7, 3, 2}) == std::vector<double>{18, 4, -3});
  CHECK(error_of([] { pg_spectrum({3, 2, 3}); }) == Errc::InvalidParams);
  CHECK(error_of([] { pg_mixing_report({2, 3, 1}); }) == Errc::InvalidParams);

  const std::vector<std::pair<PartialGeometryParams, double>> table = {
      {{12, 2, 1}, 0.904534}, {{13, 2, 1}, 0.810432}, {{14, 2, 1}, 0.744234},
      {{15, 2, 1}, 0.69351},  {{16, 2, 1}, 0.652692}, {{16, 3, 1}, 0.869771}};
  for (const auto& [p, want] : table) {
    const auto r = pg_mixing_report(p);
    CHECK(*r.report.ratio_nbrw == doctest::Approx(want).epsilon(1e-5));
    CHECK(r.observed == Comparison::Faster);
  }
  CHECK(*pg_mixing_report({11, 2, 1}).report.ratio_nbrw == doctest::Approx(1.06947).epsilon(1e-5));

  for (int K = 3; K <= 12; ++K)
    for (int R = K; R <= 12; ++R)
      for (int T = 1; T < K; ++T) {
        const auto r = pg_mixing_report({K, R, T});
        CHECK(r.predicted == Comparison::Slower);
        CHECK(r.observed == Comparison::Slower);
        CHECK(*r.report.rho_tilde == doctest::Approx(r.rho_tilde_closed).epsilon(1e-12));
      }
}

TEST_CASE("pg closed form against the eigensolver") {
  // rook m = pg(m, 2, 1), Latin l = pg(l, 3, 2), net of t squares = pg(l, t + 2, t + 1)
  auto check = [](const CliqueRegularGraph& g, PartialGeometryParams p) {
    const auto pg = pg_mixing_report(p);
    const auto r = report_of(g, 0);
    CHECK(*r.rho_tilde == doctest::Approx(*pg.report.rho_tilde).epsilon(1e-8));
    CHECK(*r.rho_nbrw == doctest::Approx(*pg.report.rho_nbrw).epsilon(1e-8));
  };
  check(rook_graph(5), {5, 2, 1});
  check(rook_graph(9), {9, 2, 1});
  check(latin_square_graph(latin_square_cyclic(7)), {7, 3, 2});
  check(ols_graph(mols_prime(7, 3)), {7, 5, 4});
  check(ols_graph(mols_prime(11, 2)), {11, 4, 3});
}

TEST_CASE("Latin crossover") {
  const double want[] = {0.987437, 0.857493, 0.780563, 0.724947, 0.681405, 0.645748};
  for (int l = 17; l <= 22; ++l) {
    const auto r = latin_crossover_report(l);
    CHECK(r.ratio == doctest::Approx(want[l - 17]).epsilon(1e-5));
    CHECK(r.rho_tilde == doctest::Approx(r.rho_tilde_closed).epsilon(1e-12));
    CHECK(r.rho_nbrw == doctest::Approx(r.rho_nbrw_closed).epsilon(1e-12));
    CHECK(r.observed == Comparison::Faster);
  }
  CHECK(latin_crossover_report(16).observed == Comparison::Slower);
  const auto far = latin_crossover_report(200);
  CHECK(std::abs(far.ratio / far.asymptotic_ratio - 1) < 0.1);
  CHECK(error_of([] { latin_crossover_report(3); }) == Errc::InvalidParams);
}

TEST_CASE("closed-form growth") {
  CHECK(qk_growth_rate_closed_form(0.3, 3, 2, 0) == 1);
  CHECK(qk_growth_rate_closed_form(1.25, 3, 2, 0) == doctest::Approx(2.0));
  CHECK(qk_growth_rate_closed_form(-1.25, 3, 2, 0) == doctest::Approx(2.0));
  const double y0 = exceptional_point(2, 4, 0);
  CHECK(y0 == doctest::Approx(-4 / (2 * std::sqrt(3.0))));
  CHECK(is_exceptional_point(y0, 2, 4, 0));
  CHECK(qk_growth_rate_closed_form(y0, 2, 4, 0) == doctest::Approx(std::sqrt(1.0 / 3)));
  CHECK(qk_growth_rate_closed_form(y0 + 1e-3, 2, 4, 0) > 1);
  CHECK(error_of([] { qk_growth_rate_closed_form(0.5, 2, 2, 0); }) == Errc::HypothesisViolation);
  CHECK(error_of([] { qk_growth_rate_closed_form(0.5, 3, 2, 1); }) == Errc::HypothesisViolation);
}

TEST_CASE("rho_tilde meets rho at lambda_n = -d") {
  // d = l = 3, lambda_n = -3: lambda = 4 = 2 sqrt(g), both rates 1/2
  const auto r = mixing_report_from_values(1.0, -3.0, 3, 3, 0.0);
  REQUIRE(r.rho_tilde);
  CHECK(*r.rho_tilde == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(*r.rho_simple == doctest::Approx(0.5).epsilon(1e-15));
  const auto c = check_case_bounds(r);
  CHECK(c.label == CaseLabel::Case2);
  REQUIRE(c.below_simple);
  CHECK_FALSE(*c.below_simple);
  CHECK(c.nbrw_ratio.pass);
}

TEST_CASE("case 1 upper constant needs lambda2 <= d(l-1)-1") {
  const auto r = mixing_report_from_values(5.25, -1.0, 3, 3, 0.0);
  const double rt = 0.5 * psi(4.25 / 4), rp = psi(5.25 / (2 * std::sqrt(5.0))) / std::sqrt(5.0);
  CHECK(*r.rho_tilde == doctest::Approx(rt).epsilon(1e-14));
  CHECK(*r.rho_nbrw == doctest::Approx(rp).epsilon(1e-14));
  const auto c = check_case_bounds(r);
  CHECK(c.label == CaseLabel::Case1);
  CHECK(rt / rp > comparison_constants(3, 3).B + 0.1);
  CHECK_FALSE(c.nbrw_ratio.pass);
  CHECK(check_case_bounds(mixing_report_from_values(5.0, -1.0, 3, 3, 0.0)).nbrw_ratio.pass);
}

TEST_CASE("finite bounds at the threshold survive eigensolver noise") {
  const auto g = ols_graph(mols_prime(7, 5));
  const auto s = spectral_summary(eigenvalues_symmetric(g.adjacency()), g.d(), g.l(), 0.0);
  const auto c = small_lambda_bounds(s, g.d(), g.l());
  CHECK(c.pass);
  CHECK(c.nbrw_ratio.value <= c.nbrw_ratio.upper);
}
