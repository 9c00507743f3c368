#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <Eigen/LU>
#include <Eigen/QR>

#include "cliquewalk/error.hpp"
#include "cliquewalk/mixing_theory.hpp"
#include "cliquewalk/rng.hpp"
#include "cliquewalk/walk_engine.hpp"

namespace cliquewalk {

namespace {

constexpr std::uint64_t kBlock = 8192;

using Triplet = Eigen::Triplet<double>;

int position_of(const std::vector<int>& v, int x) {
  const auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) return -1;
  return static_cast<int>(it - v.begin());
}

WalkParams checked_params(const CliqueRegularGraph& crg, double eps) {
  if (crg.d() < 2) throw Error(Errc::InvalidParams, "lifted chain needs d >= 2");
  return walk_params(eps, crg.d(), crg.l());
}

}  // namespace

int LiftedChain::state_of(const CliqueRegularGraph& crg, int v, int clique) const {
  const int j = position_of(crg.cliques_of(v), clique);
  if (j < 0) throw Error(Errc::InvalidParams, "vertex not in clique");
  return v * d + j;
}

LiftedChain build_lifted_chain(const CliqueRegularGraph& crg, double eps) {
  const WalkParams wp = checked_params(crg, eps);
  LiftedChain ch;
  ch.n = crg.order();
  ch.d = crg.d();
  ch.l = crg.l();
  ch.epsilon = wp.epsilon;
  const int ns = ch.n * ch.d;
  ch.states.reserve(ns);
  for (int v = 0; v < ch.n; ++v)
    for (int K : crg.cliques_of(v)) ch.states.emplace_back(v, K);

  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(ns) * ch.d * (ch.l - 1));
  for (int s = 0; s < ns; ++s) {
    const auto [v, K] = ch.states[s];
    for (int K2 : crg.cliques_of(v)) {
      const double p = K2 == K ? wp.p_stay : wp.p_leave;
      if (p == 0.0) continue;
      for (int w : crg.clique(K2))
        if (w != v) t.emplace_back(s, ch.state_of(crg, w, K2), p);
    }
  }
  ch.transition.resize(ns, ns);
  ch.transition.setFromTriplets(t.begin(), t.end());

  t.clear();
  const double first = 1.0 / crg.degree();
  for (int u = 0; u < ch.n; ++u)
    for (int K : crg.cliques_of(u))
      for (int w : crg.clique(K))
        if (w != u) t.emplace_back(u, ch.state_of(crg, w, K), first);
  ch.initial_kernel.resize(ch.n, ns);
  ch.initial_kernel.setFromTriplets(t.begin(), t.end());
  return ch;
}

Eigen::MatrixXd lifted_k_step_all(const LiftedChain& chain, int k) {
  if (k < 1) throw Error(Errc::InvalidParams, "k must be >= 1");
  Eigen::MatrixXd x = Eigen::MatrixXd(chain.initial_kernel);
  for (int j = 1; j < k; ++j) {
    Eigen::MatrixXd y = x * chain.transition;
    x = std::move(y);
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(x.rows(), chain.n);
  for (int s = 0; s < static_cast<int>(chain.states.size()); ++s) out.col(chain.states[s].first) += x.col(s);
  return out;
}

Eigen::VectorXd lifted_k_step(const LiftedChain& chain, int start_vertex, int k) {
  if (k < 1) throw Error(Errc::InvalidParams, "k must be >= 1");
  if (start_vertex < 0 || start_vertex >= chain.n) throw Error(Errc::OutOfRange, "start vertex out of range");
  Eigen::RowVectorXd x = chain.initial_kernel.row(start_vertex);
  for (int j = 1; j < k; ++j) {
    Eigen::RowVectorXd y = x * chain.transition;
    x = std::move(y);
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(chain.n);
  for (int s = 0; s < static_cast<int>(chain.states.size()); ++s) out(chain.states[s].first) += x(s);
  return out;
}

MonteCarloResult monte_carlo(const CliqueRegularGraph& crg, double eps, int start, int k,
                             std::uint64_t trials, std::uint64_t seed, int workers) {
  if (trials < 1) throw Error(Errc::InvalidParams, "trials must be >= 1");
  if (k < 1) throw Error(Errc::InvalidParams, "k must be >= 1");
  const int n = crg.order();
  if (start < 0 || start >= n) throw Error(Errc::OutOfRange, "start vertex out of range");
  const WalkParams wp = checked_params(crg, eps);
  const int d = crg.d(), l = crg.l();
  const Graph& g = crg.graph();

  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::min<std::uint64_t>(blocks, 256))));

  auto one_walk = [&](Rng& rng) {
    const auto j = rng.below(static_cast<std::uint64_t>(g.degree(start)));
    int v = g.neighbors(start)[j];
    int K = crg.clique_of_neighbor(start, j);
    for (int step = 1; step < k; ++step) {
      if (rng.uniform01() >= wp.epsilon) {
        const auto& mine = crg.cliques_of(v);
        const int pos = position_of(mine, K);
        auto o = static_cast<int>(rng.below(d - 1));
        if (o >= pos) ++o;
        K = mine[o];
      }
      const auto& members = crg.clique(K);
      const int me = position_of(members, v);
      auto m = static_cast<int>(rng.below(l - 1));
      if (m >= me) ++m;
      v = members[m];
    }
    return v;
  };

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n, 0));
  std::atomic<std::uint64_t> next_block{0};
  auto work = [&](int w) {
    for (;;) {
      const std::uint64_t b = next_block.fetch_add(1);
      if (b >= blocks) return;
      Rng rng(substream_seed(seed, b));
      const std::uint64_t count = std::min(kBlock, trials - b * kBlock);
      for (std::uint64_t t = 0; t < count; ++t) ++partial[w][one_walk(rng)];
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  MonteCarloResult r;
  r.counts.assign(n, 0);
  for (const auto& p : partial)
    for (int v = 0; v < n; ++v) r.counts[v] += p[v];
  r.trials = trials;
  r.seed = seed;
  r.start = start;
  r.k = k;
  r.probability.resize(n);
  r.std_error.resize(n);
  for (int v = 0; v < n; ++v) {
    const double p = static_cast<double>(r.counts[v]) / static_cast<double>(trials);
    r.probability[v] = p;
    r.std_error[v] = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  }
  return r;
}

RateFit empirical_mixing_rate(const CliqueRegularGraph& crg, double eps, int k_max) {
  if (k_max < 50) throw Error(Errc::InvalidParams, "k_max must be >= 50");
  const WalkParams wp = checked_params(crg, eps);
  const int n = crg.order(), d = crg.d(), l = crg.l();
  const Eigen::MatrixXd N = incidence_matrix(crg).cast<double>();
  const Eigen::MatrixXd Nt = N.transpose();
  const double deg = static_cast<double>(d) * (l - 1);
  const double ns = static_cast<double>(n) * d;

  Eigen::MatrixXd ker;
  {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(N);
    if (lu.dimensionOfKernel() > 0) {
      const Eigen::MatrixXd basis = lu.kernel();
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
      ker = qr.householderQ() * Eigen::MatrixXd::Identity(basis.rows(), basis.cols());
    }
  }

  // column u: deviation from uniform of the lifted law started at u
  Eigen::MatrixXd alpha = Eigen::MatrixXd::Constant(n, n, -1.0 / ns);
  alpha.diagonal().array() -= 1.0 / deg;
  Eigen::MatrixXd beta = Nt / deg;

  const double a_self = wp.p_stay + wp.p_leave * (d - 1);
  const double b_self = (l - 1) * (wp.p_stay - wp.p_leave);

  RateFit fit;
  fit.s.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) {
      const Eigen::MatrixXd gamma = N * beta;
      Eigen::MatrixXd a2 = -a_self * alpha - wp.p_leave * gamma;
      Eigen::MatrixXd b2 = a_self * (Nt * alpha) + wp.p_leave * (Nt * gamma) + b_self * beta;
      alpha = std::move(a2);
      beta = std::move(b2);
      const Eigen::RowVectorXd mass = d * alpha.colwise().sum() + l * beta.colwise().sum();
      alpha.rowwise() -= mass / ns;
      if (ker.size() > 0) beta -= ker * (ker.transpose() * beta);
    }
    const double s = (d * alpha + N * beta).cwiseAbs().maxCoeff();
    if (!(s >= 1e-300)) throw Error(Errc::Underflow, "deviation underflowed at k = " + std::to_string(k));
    fit.s.push_back(s);
  }

  std::vector<double> env(k_max);
  for (int k = 0; k < k_max; ++k) {
    const int from = std::max(0, k - fit.window + 1);
    env[k] = *std::max_element(fit.s.begin() + from, fit.s.begin() + k + 1);
  }
  fit.fit_from = k_max / 2;
  fit.fit_to = k_max;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  const double m = fit.fit_to - fit.fit_from + 1;
  for (int k = fit.fit_from; k <= fit.fit_to; ++k) {
    const double x = k, y = std::log(env[k - 1]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double vx = sxx - sx * sx / m, vy = syy - sy * sy / m, cxy = sxy - sx * sy / m;
  fit.slope = cxy / vx;
  fit.intercept = (sy - fit.slope * sx) / m;
  fit.r_squared = vy > 0 ? cxy * cxy / (vx * vy) : 1.0;
  fit.rate = std::exp(fit.slope);
  return fit;
}

}  // namespace cliquewalk
