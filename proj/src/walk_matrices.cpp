#include <cmath>

#include "cliquewalk/error.hpp"
#include "cliquewalk/mixing_theory.hpp"
#include "cliquewalk/walk_engine.hpp"

namespace cliquewalk {

namespace {

void check_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw Error(Errc::OutOfRange, "delta must lie in [0,1]");
}

}  // namespace

MatrixSequence Rk_recurrence(const CliqueRegularGraph& crg, double delta, int k_max) {
  if (k_max < 1) throw Error(Errc::InvalidParams, "k_max must be >= 1");
  check_delta(delta);
  const int d = crg.d(), l = crg.l();
  const double c = (l - 2) * (1.0 - delta);
  const double b = (l - 1) * (1.0 - delta) * (d - 1 + delta);
  const Eigen::MatrixXd A = crg.adjacency();
  MatrixSequence seq;
  seq.d = d;
  seq.l = l;
  seq.delta = delta;
  seq.R.push_back(A);
  if (k_max >= 2) {
    Eigen::MatrixXd r2 = A * A - c * A;
    r2.diagonal().array() -= static_cast<double>(d) * (l - 1) * (1.0 - delta);
    seq.R.push_back(std::move(r2));
  }
  for (int k = 2; k < k_max; ++k) {
    const Eigen::MatrixXd& rk = seq.R[k - 1];
    Eigen::MatrixXd next = rk * A - c * rk - b * seq.R[k - 2];
    seq.R.push_back(std::move(next));
  }
  return seq;
}

Eigen::MatrixXd Qk_matrix(const CliqueRegularGraph& crg, double delta, int k) {
  if (k < 1) throw Error(Errc::InvalidParams, "Q_k needs k >= 1");
  check_delta(delta);
  const int d = crg.d(), l = crg.l(), n = crg.order();
  const Eigen::MatrixXd A = crg.adjacency();
  if (delta > kSimpleWalkDelta) {
    Eigen::MatrixXd p = A;
    for (int j = 1; j < k; ++j) p = p * A;
    return p;
  }
  const double c = (l - 2) * (1.0 - delta);
  const double sb = std::sqrt((l - 1) * (1.0 - delta) * (d - 1 + delta));
  const double kappa = (1.0 - delta) * std::sqrt((l - 1) * (1.0 - delta)) / std::sqrt(d - 1 + delta);
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd Y = (A - c * I) / (2 * sb);

  // U_{k-2}, U_{k-1}, U_k of Y
  Eigen::MatrixXd u_km2 = Eigen::MatrixXd::Zero(n, n);  // U_{-1}
  Eigen::MatrixXd u_km1 = I;                            // U_0
  Eigen::MatrixXd u_k = 2 * Y;                          // U_1
  for (int j = 1; j < k; ++j) {
    Eigen::MatrixXd next = 2 * Y * u_k - u_km1;
    u_km2 = std::move(u_km1);
    u_km1 = std::move(u_k);
    u_k = std::move(next);
  }
  const Eigen::MatrixXd q = sb * u_k + c * u_km1 - kappa * u_km2;
  return std::pow(sb, k - 1) * q;
}

std::vector<Eigen::MatrixXd> transition_matrices(const CliqueRegularGraph& crg, double eps, int k_max) {
  if (k_max < 1) throw Error(Errc::InvalidParams, "k must be >= 1");
  const int d = crg.d(), l = crg.l();
  const double delta = delta_from_epsilon(eps, d);
  if (delta > kSimpleWalkDelta)
    throw Error(Errc::EpsilonAtSimpleWalk, "eps = 1/d is the simple walk; use simple_walk_matrix");
  const double c = (l - 2) * (1.0 - delta);
  const double b = (l - 1) * (1.0 - delta) * (d - 1 + delta);
  const double g = (d - 1 + delta) * (l - 1);
  const double deg = static_cast<double>(d) * (l - 1);
  const Eigen::MatrixXd A = crg.adjacency();

  // S_k = R^(k) / g^{k-1}
  std::vector<Eigen::MatrixXd> out;
  Eigen::MatrixXd s_prev, s = A;
  for (int k = 1; k <= k_max; ++k) {
    if (k == 2) {
      Eigen::MatrixXd next = A * A - c * A;
      next.diagonal().array() -= deg * (1.0 - delta);
      s_prev = std::move(s);
      s = next / g;
    } else if (k > 2) {
      Eigen::MatrixXd next = (s * A - c * s) / g - (b / (g * g)) * s_prev;
      s_prev = std::move(s);
      s = std::move(next);
    }
    Eigen::MatrixXd p = s / deg;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
      double& x = p.data()[i];
      if (x < 0.0) {
        if (x < -1e-12)
          throw Error(Errc::NumericalFailure, "negative transition probability " + std::to_string(x));
        x = 0.0;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

Eigen::MatrixXd transition_matrix(const CliqueRegularGraph& crg, double eps, int k) {
  return transition_matrices(crg, eps, k).back();
}

Eigen::MatrixXd simple_walk_matrix(const CliqueRegularGraph& crg, int k) {
  if (k < 1) throw Error(Errc::InvalidParams, "k must be >= 1");
  const Eigen::MatrixXd step = crg.adjacency() / static_cast<double>(crg.degree());
  Eigen::MatrixXd p = step;
  for (int j = 1; j < k; ++j) p = p * step;
  return p;
}

}  // namespace cliquewalk
