#include "cliquewalk/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cliquewalk/error.hpp"
#include "cliquewalk/generators.hpp"
#include "cliquewalk/graph_io.hpp"
#include "cliquewalk/mixing_theory.hpp"
#include "cliquewalk/report_json.hpp"
#include "cliquewalk/spectrum.hpp"
#include "cliquewalk/walk_engine.hpp"

namespace cliquewalk::cli {

using nlohmann::json;

namespace {

struct Source {
  std::string graph_file;
  std::string family;
  int n = 0;
  int d = 0;
  int side = 0;
  int order = 0;
  int t = 0;
  std::uint64_t seed = 1;
  std::string latin_file;
  std::string host;
};

void add_family_options(CLI::App* app, Source& s) {
  app->add_option("--family", s.family, "cycle, prism, petersen, random-regular, rook, latin, mols-graph, line-graph")
      ->check(CLI::IsMember(
          {"cycle", "prism", "petersen", "random-regular", "rook", "latin", "mols-graph", "line-graph"}));
  app->add_option("--n", s.n, "vertex count (cycle, random-regular) or prism size");
  app->add_option("--d", s.d, "degree (random-regular)");
  app->add_option("--seed", s.seed, "generator seed (random-regular)");
  app->add_option("--side", s.side, "rook graph side");
  app->add_option("--order", s.order, "Latin square order");
  app->add_option("--t", s.t, "number of orthogonal squares (mols-graph)");
  app->add_option("--latin-file", s.latin_file, "Latin square text file (latin)");
  app->add_option("--host", s.host, "petersen, k<N>, cycle<N> or a graph file (line-graph)");
}

void add_source_options(CLI::App* app, Source& s) {
  app->add_option("--graph", s.graph_file, "graph JSON file");
  add_family_options(app, s);
}

Graph host_graph(const std::string& host) {
  if (host == "petersen") return petersen().graph();
  auto number_after = [&](std::size_t prefix) {
    const std::string rest = host.substr(prefix);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }))
      return -1;
    return std::stoi(rest);
  };
  if (host.rfind("k", 0) == 0 && number_after(1) > 0) return complete_graph(number_after(1));
  if (host.rfind("cycle", 0) == 0 && number_after(5) > 0) return cycle(number_after(5)).graph();
  return load_graph_file(host).graph.graph();
}

GraphFile generate(const Source& s) {
  json meta = {{"family", s.family}};
  auto make = [&]() -> CliqueRegularGraph {
    if (s.family == "cycle") {
      meta["n"] = s.n;
      return cycle(s.n);
    }
    if (s.family == "prism") {
      meta["n"] = s.n;
      return prism(s.n);
    }
    if (s.family == "petersen") return petersen();
    if (s.family == "random-regular") {
      meta["n"] = s.n;
      meta["d"] = s.d;
      meta["seed"] = s.seed;
      return random_regular(s.n, s.d, s.seed);
    }
    if (s.family == "rook") {
      meta["side"] = s.side;
      return rook_graph(s.side);
    }
    if (s.family == "latin") {
      if (!s.latin_file.empty()) {
        std::ifstream in(s.latin_file);
        if (!in) throw Error(Errc::Usage, "cannot open " + s.latin_file);
        meta["latin_file"] = s.latin_file;
        return latin_square_graph(read_latin_square(in));
      }
      meta["order"] = s.order;
      return latin_square_graph(latin_square_cyclic(s.order));
    }
    if (s.family == "mols-graph") {
      meta["order"] = s.order;
      meta["t"] = s.t;
      return ols_graph(mols_prime(s.order, s.t));
    }
    if (s.family == "line-graph") {
      if (s.host.empty()) throw Error(Errc::Usage, "line-graph needs --host");
      meta["host"] = s.host;
      return line_graph(host_graph(s.host));
    }
    throw Error(Errc::Usage, "unknown family '" + s.family + "'");
  };
  CliqueRegularGraph g = make();
  return {std::move(g), meta};
}

void check_size(const CliqueRegularGraph& g) {
  if (g.order() > max_vertices())
    throw Error(Errc::TooLarge, std::to_string(g.order()) + " vertices exceed the cap of " +
                                    std::to_string(max_vertices()) + " (CLIQUEWALK_MAX_N)");
}

GraphFile load_source(const Source& s) {
  const bool file = !s.graph_file.empty(), fam = !s.family.empty();
  if (file == fam) throw Error(Errc::Usage, "give exactly one of --graph or --family");
  GraphFile g = file ? load_graph_file(s.graph_file) : generate(s);
  check_size(g.graph);
  return g;
}

// eps in [0, 1/d]; exactly 1/d is the simple walk.
void check_eps(double eps, int d) {
  if (!(eps >= 0.0) || eps * d > 1.0 + 1e-12)
    throw Error(Errc::OutOfRange, "eps must lie in [0, 1/d] = [0, " + format_number(1.0 / d) + "]");
}

bool is_simple(double eps, int d) { return delta_from_epsilon(eps, d) > kSimpleWalkDelta; }

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return v.dump();
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ' ';
      s += cell(e);
    }
    return s;
  }
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, out);
    return;
  }
  if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
    return;
  }
  out.emplace_back(prefix, cell(v));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

json check_entry(const std::string& name, bool pass, double value, double limit) {
  return {{"name", name}, {"pass", pass}, {"skipped", false}, {"value", value}, {"limit", limit}};
}

// ---- subcommands ----------------------------------------------------------

struct Common {
  Source src;
  double eps = 0.0;
  std::string format = "json";
};

void add_format(CLI::App* app, std::string& format) {
  app->add_option("--format", format, "json, table or csv")->check(CLI::IsMember({"json", "table", "csv"}));
}

MixingReport analyze_graph(const CliqueRegularGraph& g, double eps) {
  check_eps(eps, g.d());
  const Spectrum spec = eigenvalues_symmetric(g.adjacency());
  return mixing_report(spec, g.d(), g.l(), eps);
}

json cmd_analyze(const Common& c) {
  const GraphFile gf = load_source(c.src);
  const MixingReport r = analyze_graph(gf.graph, c.eps);
  json out = {{"report", to_json(r)}, {"n", gf.graph.order()}};
  out["case_bounds"] = r.case_label ? to_json(check_case_bounds(r)) : json(nullptr);
  out["small_lambda_bounds"] = nullptr;
  if (r.small_lambda_applicable) {
    try {
      out["small_lambda_bounds"] = to_json(small_lambda_bounds(r.summary_zero, r.d, r.l));
    } catch (const Error& e) {
      if (e.category() != ErrorCategory::Hypothesis) throw;
    }
  }
  out["provenance"] = provenance_json(&gf.graph, std::nullopt);
  return out;
}

json cmd_compare(const Common& c) {
  const GraphFile gf = load_source(c.src);
  const MixingReport r = analyze_graph(gf.graph, 0.0);
  json out = {{"d", r.d},
              {"l", r.l},
              {"rho_tilde", r.rho_tilde ? json(*r.rho_tilde) : json(nullptr)},
              {"rho_simple", r.rho_simple ? json(*r.rho_simple) : json(nullptr)},
              {"rho_nbrw", r.rho_nbrw ? json(*r.rho_nbrw) : json(nullptr)},
              {"ratio_nbrw", r.ratio_nbrw ? json(*r.ratio_nbrw) : json(nullptr)},
              {"ratio_simple", r.ratio_simple ? json(*r.ratio_simple) : json(nullptr)}};
  out["constants"] = r.constants ? to_json(*r.constants) : json(nullptr);
  out["case"] = r.case_label ? to_json(*r.case_label) : json(nullptr);
  out["simple_case"] = r.simple_case ? to_json(*r.simple_case) : json(nullptr);
  out["case_bounds"] = r.case_label ? to_json(check_case_bounds(r)) : json(nullptr);
  out["small_lambda_bounds"] = nullptr;
  if (r.small_lambda_applicable) {
    try {
      out["small_lambda_bounds"] = to_json(small_lambda_bounds(r.summary_zero, r.d, r.l));
    } catch (const Error& e) {
      if (e.category() != ErrorCategory::Hypothesis) throw;
    }
  }
  out["provenance"] = provenance_json(&gf.graph, std::nullopt);
  return out;
}

json cmd_verify(const Common& c, int k_max, bool& all_pass) {
  if (k_max < 1) throw Error(Errc::Usage, "--k must be >= 1");
  const GraphFile gf = load_source(c.src);
  const CliqueRegularGraph& g = gf.graph;
  check_eps(c.eps, g.d());
  const int n = g.order(), d = g.d(), l = g.l();
  const bool simple = is_simple(c.eps, d);
  const double delta = simple ? 1.0 : delta_from_epsilon(c.eps, d);
  json checks = json::array();

  const MatrixSequence seq = Rk_recurrence(g, delta, k_max);
  double worst_rq = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const Eigen::MatrixXd& r = seq.at(k);
    worst_rq = std::max(worst_rq, max_abs(r - Qk_matrix(g, delta, k)) / std::max(1.0, max_abs(r)));
  }
  checks.push_back(check_entry("recurrence_vs_chebyshev", worst_rq <= 1e-8, worst_rq, 1e-8));

  std::vector<Eigen::MatrixXd> P;
  if (simple) {
    for (int k = 1; k <= k_max; ++k) P.push_back(simple_walk_matrix(g, k));
  } else {
    P = transition_matrices(g, c.eps, k_max);
  }
  const LiftedChain chain = build_lifted_chain(g, c.eps);
  double worst_lift = 0.0, worst_rows = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    worst_lift = std::max(worst_lift, max_abs(P[k - 1] - lifted_k_step_all(chain, k)));
    worst_rows = std::max(worst_rows, (P[k - 1].rowwise().sum().array() - 1.0).abs().maxCoeff());
  }
  checks.push_back(check_entry("transition_vs_lifted_chain", worst_lift <= 1e-10, worst_lift, 1e-10));
  checks.push_back(check_entry("row_sums", worst_rows <= 1e-10, worst_rows, 1e-10));

  if (n <= 20) {
    const int ko = std::min(k_max, 5);
    const Rational dr(delta);
    const auto exact = Rk_recurrence_exact(g, dr, ko);
    int bad = 0;
    for (int k = 1; k <= ko; ++k)
      if (!(brute_force_weighted_walks_exact(g, dr, k) == exact[k - 1])) ++bad;
    checks.push_back(check_entry("weighted_walk_oracle", bad == 0, bad, 0));
  } else {
    checks.push_back({{"name", "weighted_walk_oracle"},
                      {"pass", true},
                      {"skipped", true},
                      {"detail", "TooLarge: enumeration needs n <= 20"}});
  }

  const Spectrum spec = eigenvalues_symmetric(g.adjacency());
  std::vector<double> mu(n);
  double worst_spec = 0.0, worst_sandwich = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    for (int i = 0; i < n; ++i) mu[i] = mu_ik(spec.eigenvalues[i], k, d, l, delta);
    double mu_max = 0.0;
    for (int i = 1; i < n; ++i) mu_max = std::max(mu_max, std::abs(mu[i]));
    const double s = (P[k - 1].array() - 1.0 / n).abs().maxCoeff();
    const double tol = 1e-10;
    worst_sandwich = std::max({worst_sandwich, mu_max / n - s - tol, s - mu_max - tol, 0.0});
    if (k == k_max) {
      std::vector<double> got = eigenvalues_symmetric(0.5 * (P[k - 1] + P[k - 1].transpose())).eigenvalues;
      std::vector<double> want = mu;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      for (int i = 0; i < n; ++i) worst_spec = std::max(worst_spec, std::abs(got[i] - want[i]));
    }
  }
  checks.push_back(check_entry("spectral_consistency", worst_spec <= 1e-8, worst_spec, 1e-8));
  checks.push_back(check_entry("sandwich", worst_sandwich == 0.0, worst_sandwich, 0.0));

  all_pass = std::all_of(checks.begin(), checks.end(), [](const json& x) { return x.at("pass").get<bool>(); });
  return {{"epsilon", c.eps},
          {"delta", delta},
          {"k_max", k_max},
          {"checks", checks},
          {"pass", all_pass},
          {"provenance", provenance_json(&g, std::nullopt)}};
}

json cmd_simulate(const Common& c, int start, int k, std::uint64_t trials, std::uint64_t seed, int workers) {
  const GraphFile gf = load_source(c.src);
  const CliqueRegularGraph& g = gf.graph;
  check_eps(c.eps, g.d());
  if (start < 0 || start >= g.order()) throw Error(Errc::OutOfRange, "--start out of range");
  if (k < 1) throw Error(Errc::Usage, "--k must be >= 1");
  if (trials < 1) throw Error(Errc::Usage, "--trials must be >= 1");
  const MonteCarloResult mc = monte_carlo(g, c.eps, start, k, trials, seed, workers);
  const Eigen::MatrixXd P = is_simple(c.eps, g.d()) ? simple_walk_matrix(g, k) : transition_matrix(g, c.eps, k);
  std::vector<double> exact(g.order());
  double max_z = 0.0;
  for (int v = 0; v < g.order(); ++v) {
    const double p = P(start, v);
    exact[v] = p;
    const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    const double dev = std::abs(mc.probability[v] - p);
    if (se > 0)
      max_z = std::max(max_z, dev / se);
    else if (dev > 0)
      max_z = HUGE_VAL;
  }
  json out = to_json(mc);
  out["epsilon"] = c.eps;
  out["exact"] = exact;
  out["max_z"] = std::isfinite(max_z) ? json(max_z) : json("inf");
  out["provenance"] = provenance_json(&g, seed);
  return out;
}

json cmd_rate(const Common& c, int k_max) {
  const GraphFile gf = load_source(c.src);
  const CliqueRegularGraph& g = gf.graph;
  const MixingReport r = analyze_graph(g, c.eps);
  const RateFit fit = empirical_mixing_rate(g, c.eps, k_max);
  json out = {{"epsilon", c.eps}, {"k_max", k_max}, {"fit", to_json(fit)}};
  out["rho_tilde"] = r.rho_tilde ? json(*r.rho_tilde) : json(nullptr);
  out["regime"] = std::string(regime_name(r.regime));
  out["relative_error"] = r.rho_tilde ? json(std::abs(fit.rate - *r.rho_tilde) / *r.rho_tilde) : json(nullptr);
  out["provenance"] = provenance_json(&g, std::nullopt);
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    double x = 0;
    const char* end = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), end, x);
    if (tok.empty() || res.ec != std::errc() || res.ptr != end)
      throw Error(Errc::Usage, "bad eps value '" + tok + "'");
    out.push_back(x);
  }
  if (out.empty()) throw Error(Errc::Usage, "empty eps grid");
  return out;
}

json cmd_sweep(const Common& c, const std::optional<std::string>& grid_text, int points, int k_max) {
  std::vector<double> grid;
  if (grid_text) grid = parse_grid(*grid_text);
  const GraphFile gf = load_source(c.src);
  const CliqueRegularGraph& g = gf.graph;
  const int d = g.d();
  if (grid.empty()) {
    if (points < 1) throw Error(Errc::Usage, "empty eps grid");
    for (int i = 0; i < points; ++i) grid.push_back(points == 1 ? 0.0 : (1.0 / d) * i / (points - 1));
  }
  for (double e : grid) check_eps(e, d);
  const Spectrum spec = eigenvalues_symmetric(g.adjacency());
  json rows = json::array();
  for (double e : grid) {
    const MixingReport r = mixing_report(spec, d, g.l(), e);
    json row = {{"epsilon", e}, {"delta", r.delta}};
    row["rho_tilde"] = r.rho_tilde ? json(*r.rho_tilde) : json(nullptr);
    row["empirical_rate"] = nullptr;
    if (k_max > 0) {
      try {
        row["empirical_rate"] = empirical_mixing_rate(g, e, k_max).rate;
      } catch (const Error& err) {
        if (err.code() != Errc::Underflow) throw;
      }
    }
    row["rho_simple"] = r.rho_simple ? json(*r.rho_simple) : json(nullptr);
    row["rho_nbrw"] = r.rho_nbrw ? json(*r.rho_nbrw) : json(nullptr);
    row["margin"] = r.margin ? json(*r.margin) : json(nullptr);
    rows.push_back(row);
  }
  return rows;
}

json cmd_qk_growth(int d, int l, double delta, std::optional<double> y, int grid, int k_max) {
  if (k_max < 200) throw Error(Errc::Usage, "--k-max must be >= 200");
  std::vector<double> ys;
  if (y) {
    ys.push_back(*y);
  } else {
    if (grid < 2) throw Error(Errc::Usage, "--grid must be >= 2");
    for (int i = 0; i < grid; ++i) {
      const double v = -2.5 + 5.0 * i / (grid - 1);
      if (std::abs(std::abs(v) - 1.0) > 1e-3) ys.push_back(v);
    }
    if (l * (1.0 - delta) > d)
      ys.push_back(exceptional_point(d, l, delta));
  }
  json rows = json::array();
  for (double v : ys) {
    const double closed = qk_growth_rate_closed_form(v, d, l, delta);
    const double emp = qk_empirical_growth(v, d, l, delta, k_max);
    rows.push_back({{"y", v},
                    {"closed_form", closed},
                    {"empirical", emp},
                    {"relative_error", std::abs(emp - closed) / closed},
                    {"exceptional", is_exceptional_point(v, d, l, delta)}});
  }
  return rows;
}

}  // namespace

int max_vertices() {
  if (const char* v = std::getenv("CLIQUEWALK_MAX_N")) {
    char* end = nullptr;
    const long x = std::strtol(v, &end, 10);
    if (end != v && *end == '\0' && x > 0) return static_cast<int>(std::min<long>(x, 1 << 30));
  }
  return 2000;
}

void write_formatted(std::ostream& out, const json& doc, const std::string& format) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
    return;
  }
  if (doc.is_array() && !doc.empty() && doc[0].is_object()) {
    std::vector<std::vector<std::pair<std::string, std::string>>> rows;
    for (const auto& r : doc) {
      rows.emplace_back();
      flatten(r, "", rows.back());
    }
    if (format == "csv") {
      for (std::size_t i = 0; i < rows[0].size(); ++i) out << (i ? "," : "") << csv_field(rows[0][i].first);
      out << "\n";
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << csv_field(r[i].second);
        out << "\n";
      }
    } else {
      std::vector<std::size_t> w(rows[0].size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = rows[0][i].first.size();
      for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].second.size());
      auto line = [&](auto get) {
        for (std::size_t i = 0; i < w.size(); ++i) {
          const std::string s = get(i);
          out << s << std::string(w[i] - s.size() + (i + 1 < w.size() ? 2 : 0), ' ');
        }
        out << "\n";
      };
      line([&](std::size_t i) { return rows[0][i].first; });
      for (const auto& r : rows) line([&](std::size_t i) { return i < r.size() ? r[i].second : std::string(); });
    }
    return;
  }
  std::vector<std::pair<std::string, std::string>> kv;
  flatten(doc, "", kv);
  if (format == "csv") {
    for (std::size_t i = 0; i < kv.size(); ++i) out << (i ? "," : "") << csv_field(kv[i].first);
    out << "\n";
    for (std::size_t i = 0; i < kv.size(); ++i) out << (i ? "," : "") << csv_field(kv[i].second);
    out << "\n";
    return;
  }
  std::size_t w = 0;
  for (const auto& [k, v] : kv) w = std::max(w, k.size());
  for (const auto& [k, v] : kv) out << k << std::string(w - k.size() + 2, ' ') << v << "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"clique-partitioned random walk toolkit", "cliquewalk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Source gen_src;
  std::string gen_out;
  auto* gen = app.add_subcommand("generate", "write a graph file");
  add_family_options(gen, gen_src);
  gen->add_option("--out", gen_out, "output path (stdout when absent)");

  Common an;
  auto* analyze = app.add_subcommand("analyze", "spectral mixing report");
  add_source_options(analyze, an.src);
  analyze->add_option("--eps", an.eps, "stay probability");
  add_format(analyze, an.format);

  Common ve;
  int verify_k = 10;
  auto* verify = app.add_subcommand("verify", "cross-check the exact transition routes");
  add_source_options(verify, ve.src);
  verify->add_option("--eps", ve.eps, "stay probability");
  verify->add_option("--k", verify_k, "largest step count");
  add_format(verify, ve.format);

  Common si;
  int sim_start = 0, sim_k = 6, sim_workers = 1;
  std::uint64_t sim_trials = 100000, sim_seed = 42;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo law of X_k");
  add_source_options(simulate, si.src);
  simulate->add_option("--eps", si.eps, "stay probability");
  simulate->add_option("--start", sim_start, "start vertex");
  simulate->add_option("--k", sim_k, "steps");
  simulate->add_option("--trials", sim_trials, "number of walks");
  simulate->add_option("--walk-seed", sim_seed, "Monte Carlo seed");
  simulate->add_option("--workers", sim_workers, "threads");
  add_format(simulate, si.format);

  Common ra;
  int rate_k = 200;
  auto* rate = app.add_subcommand("rate", "empirical mixing rate against the spectral value");
  add_source_options(rate, ra.src);
  rate->add_option("--eps", ra.eps, "stay probability");
  rate->add_option("--k-max", rate_k, "steps to power");
  add_format(rate, ra.format);

  Common sw;
  sw.format = "csv";
  std::optional<std::string> sweep_grid;
  int sweep_points = 11, sweep_k = 200;
  auto* sweep = app.add_subcommand("sweep", "rates over an eps grid");
  add_source_options(sweep, sw.src);
  sweep->add_option("--eps-grid", sweep_grid, "comma-separated eps values");
  sweep->add_option("--points", sweep_points, "evenly spaced points on [0, 1/d]");
  sweep->add_option("--k-max", sweep_k, "steps for the empirical rate, 0 skips it");
  add_format(sweep, sw.format);

  Common co;
  auto* compare = app.add_subcommand("compare", "case split and comparison bounds at eps = 0");
  add_source_options(compare, co.src);
  add_format(compare, co.format);

  PartialGeometryParams pgp;
  std::string pg_format = "json";
  auto* pg = app.add_subcommand("pg", "partial geometry point graph");
  pg->add_option("--K", pgp.K, "points per line")->required();
  pg->add_option("--R", pgp.R, "lines per point")->required();
  pg->add_option("--T", pgp.T, "collinearity parameter")->required();
  add_format(pg, pg_format);

  int lc_from = 17, lc_to = 22;
  std::string lc_format = "json";
  auto* lc = app.add_subcommand("latin-crossover", "Latin square graphs around the crossover");
  lc->add_option("--from", lc_from, "first order");
  lc->add_option("--to", lc_to, "last order");
  add_format(lc, lc_format);

  int lm_d = 3, lm_l = 2, lm_grid = 50, lm_k = 2000;
  double lm_delta = 0.0;
  std::optional<double> lm_y;
  std::string lm_format = "json";
  auto* growth = app.add_subcommand("qk-growth", "growth of q_k(y), closed form against the recurrence");
  growth->alias("lemma");
  growth->add_option("--d", lm_d, "cliques per vertex");
  growth->add_option("--l", lm_l, "clique order");
  growth->add_option("--delta", lm_delta, "backtracking weight");
  growth->add_option("--y", lm_y, "single point");
  growth->add_option("--grid", lm_grid, "grid size on [-2.5, 2.5]");
  growth->add_option("--k-max", lm_k, "recurrence length");
  add_format(growth, lm_format);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code_of(ErrorCategory::Usage);
  }

  try {
    if (gen->parsed()) {
      if (gen_src.family.empty()) throw Error(Errc::Usage, "generate needs --family");
      const GraphFile g = generate(gen_src);
      check_size(g.graph);
      if (gen_out.empty())
        out << graph_document_text(g.graph, g.meta);
      else
        save_graph_file(gen_out, g.graph, g.meta);
    } else if (analyze->parsed()) {
      write_formatted(out, cmd_analyze(an), an.format);
    } else if (verify->parsed()) {
      bool pass = false;
      write_formatted(out, cmd_verify(ve, verify_k, pass), ve.format);
      if (!pass) {
        err << "verification failed\n";
        return exit_code_of(ErrorCategory::Numerical);
      }
    } else if (simulate->parsed()) {
      write_formatted(out, cmd_simulate(si, sim_start, sim_k, sim_trials, sim_seed, sim_workers), si.format);
    } else if (rate->parsed()) {
      write_formatted(out, cmd_rate(ra, rate_k), ra.format);
    } else if (sweep->parsed()) {
      write_formatted(out, cmd_sweep(sw, sweep_grid, sweep_points, sweep_k), sw.format);
    } else if (compare->parsed()) {
      write_formatted(out, cmd_compare(co), co.format);
    } else if (pg->parsed()) {
      write_formatted(out, to_json(pg_mixing_report(pgp)), pg_format);
    } else if (lc->parsed()) {
      if (lc_from > lc_to) throw Error(Errc::Usage, "--from must not exceed --to");
      json rows = json::array();
      for (int l = lc_from; l <= lc_to; ++l) rows.push_back(to_json(latin_crossover_report(l)));
      write_formatted(out, rows, lc_format);
    } else if (growth->parsed()) {
      write_formatted(out, cmd_qk_growth(lm_d, lm_l, lm_delta, lm_y, lm_grid, lm_k), lm_format);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_of(e.category());
  }
  return 0;
}

}  // namespace cliquewalk::cli
