#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <boost/multiprecision/cpp_int.hpp>

#include "cliquewalk/graph.hpp"

namespace cliquewalk {

// ---- scalar Chebyshev machinery -------------------------------------------

// U_k(x) by the three-term recurrence, k >= -1.
double chebyshev_U(int k, double x);

struct QkValue {
  double log_magnitude = 0.0;  // log|q_k|, -inf when q_k = 0
  int sign = 0;
};

// q_k(y) = sqrt(b) U_k + c U_{k-1} - kappa U_{k-2} with b = (l-1)(1-delta)(d-1+delta),
// c = (l-2)(1-delta), kappa = (1-delta) sqrt((l-1)(1-delta)) / sqrt(d-1+delta).
// Carried as a renormalized recurrence in doubles. At the exceptional point y0 the
// sequence is the recessive solution, so y within 1e-12 of y0 is evaluated at y0
// itself in MPFR with enough bits to cover the growth of the dominant solution.
QkValue qk_scalar(int k, double y, int d, int l, double delta);

// max over k in [k_max/2, k_max] of |q_k(y)|^{1/k}; k_max >= 200.
double qk_empirical_growth(double y, int d, int l, double delta, int k_max);

// Eigenvalue of P^(k) belonging to adjacency eigenvalue lambda_i. lambda_i within
// 1e-6 of -d is taken as -d exactly. delta = 1 gives (lambda_i / (d(l-1)))^k.
double mu_ik(double lambda_i, int k, int d, int l, double delta);

// ---- matrix routes --------------------------------------------------------

struct MatrixSequence {
  std::vector<Eigen::MatrixXd> R;  // R[k-1] = R^(k), k = 1..k_max
  int d = 0;
  int l = 0;
  double delta = 0.0;

  const Eigen::MatrixXd& at(int k) const { return R.at(k - 1); }
};

// R^(1) = A, R^(2) = A^2 - cA - d(l-1)(1-delta) I, R^(k+1) = R^(k) A - c R^(k) - b R^(k-1).
MatrixSequence Rk_recurrence(const CliqueRegularGraph& crg, double delta, int k_max);

// Q_k(R) through the U-recurrence on Y = (R - cI) / (2 sqrt(b)); delta = 1 gives R^k.
Eigen::MatrixXd Qk_matrix(const CliqueRegularGraph& crg, double delta, int k);

// P^(k) = R^(k) / (d(l-1) ((d-1+delta)(l-1))^{k-1}), via a normalized recurrence.
// Throws EpsilonAtSimpleWalk at eps = 1/d.
Eigen::MatrixXd transition_matrix(const CliqueRegularGraph& crg, double eps, int k);
// All P^(1..k_max) at once.
std::vector<Eigen::MatrixXd> transition_matrices(const CliqueRegularGraph& crg, double eps, int k_max);

// (A / (d(l-1)))^k, the eps = 1/d law.
Eigen::MatrixXd simple_walk_matrix(const CliqueRegularGraph& crg, int k);

// ---- exact oracle ---------------------------------------------------------

using Rational = boost::multiprecision::cpp_rational;

struct RationalMatrix {
  int n = 0;
  std::vector<Rational> a;

  explicit RationalMatrix(int size = 0) : n(size), a(static_cast<std::size_t>(size) * size) {}
  Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  bool operator==(const RationalMatrix&) const = default;
};

std::vector<RationalMatrix> Rk_recurrence_exact(const CliqueRegularGraph& crg, const Rational& delta, int k_max);

// Number of admissible length-2k walks u -> K0 -> x1 -> ... -> v in the vertex-clique
// incidence graph that stay in the previous clique exactly m times.
struct WalkCounts {
  int n = 0;
  int k = 0;
  std::vector<std::uint64_t> count;  // index (u*n + v)*k + m, m < k

  std::uint64_t at(int u, int v, int m) const {
    return count[(static_cast<std::size_t>(u) * n + v) * k + m];
  }
};

// Enumerates walks one by one. Throws TooLarge unless n <= 30 and 1 <= k <= 6.
WalkCounts enumerate_weighted_walks(const CliqueRegularGraph& crg, int k);

// Sum over walks of delta^m.
Eigen::MatrixXd brute_force_weighted_walks(const CliqueRegularGraph& crg, double delta, int k);
RationalMatrix brute_force_weighted_walks_exact(const CliqueRegularGraph& crg, const Rational& delta, int k);

// ---- lifted chain ---------------------------------------------------------

using SparseRows = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// Markov chain on (vertex, clique of the last edge). State of (v, j-th clique of v) is v*d + j.
struct LiftedChain {
  std::vector<std::pair<int, int>> states;  // (vertex, clique)
  SparseRows transition;                     // nd x nd
  SparseRows initial_kernel;                 // n x nd
  int n = 0;
  int d = 0;
  int l = 0;
  double epsilon = 0.0;

  int state_of(const CliqueRegularGraph& crg, int v, int clique) const;
};

// eps in [0, 1/d], d >= 2.
LiftedChain build_lifted_chain(const CliqueRegularGraph& crg, double eps);

// Law of X_k started at u, marginalized to vertices.
Eigen::VectorXd lifted_k_step(const LiftedChain& chain, int start_vertex, int k);
// Row u is lifted_k_step(chain, u, k).
Eigen::MatrixXd lifted_k_step_all(const LiftedChain& chain, int k);

struct MonteCarloResult {
  std::vector<std::uint64_t> counts;
  std::vector<double> probability;
  std::vector<double> std_error;  // sqrt(p(1-p)/trials)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int start = 0;
  int k = 0;
};

// Trials are split into fixed blocks of 8192, block b drawing from substream_seed(seed, b);
// workers only decide which thread runs a block, so counts depend on (seed, trials) alone.
MonteCarloResult monte_carlo(const CliqueRegularGraph& crg, double eps, int start, int k,
                             std::uint64_t trials, std::uint64_t seed, int workers = 1);

struct RateFit {
  double rate = 0.0;  // exp(slope)
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int window = 10;
  int fit_from = 0;
  int fit_to = 0;
  std::vector<double> s;  // s[k-1] = max_{u,v} |P^(k)_uv - 1/n|
};

// Powers the lifted chain on the deviation from uniform, written as
// pi(w,K) = alpha(w) + beta(K) (an invariant subspace containing every start law),
// with beta kept orthogonal to ker N. s_k is enveloped by a running max over 10
// steps and log-envelope is fitted by least squares on [k_max/2, k_max].
// Throws Underflow when some s_k drops below 1e-300; k_max >= 50.
RateFit empirical_mixing_rate(const CliqueRegularGraph& crg, double eps, int k_max);

}  // namespace cliquewalk
