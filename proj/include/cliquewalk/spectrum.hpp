#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace cliquewalk {

inline constexpr double kEigEqTol = 1e-6;

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  double tolerance = 0.0;           // off-diagonal Frobenius norm at convergence
  int sweeps = 0;

  int size() const { return static_cast<int>(eigenvalues.size()); }

  // (value, multiplicity) with eigenvalues closer than tol merged; descending.
  std::vector<std::pair<double, int>> clusters(double tol = kEigEqTol) const;
};

// Cyclic-by-row Jacobi. Throws NotSymmetric (|a_ij - a_ji| > 1e-12) or
// NoConvergence (off-diagonal norm above 1e-12 ||A||_F after 50 sweeps).
Spectrum eigenvalues_symmetric(const Eigen::MatrixXd& a);

struct SpectralSummary {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda_n = 0.0;
  double lambda_prime = 0.0;  // max(|lambda2|, |lambda_n|)
  double lambda = 0.0;        // max over i in {2, n} of |lambda_i - c|, c = (l-2)(1-delta)
  double lambda_hat = 0.0;    // same over 2..n, skipping eigenvalues equal to -d
  bool has_minus_d = false;
  double delta = 0.0;
  int d = 0;
  int l = 0;
  // Read off the spectrum (tolerance kEigEqTol).
  bool connected = true;
  bool bipartite = false;
  bool complete = false;

  bool operator==(const SpectralSummary&) const = default;
};

// Throws AllEigenvaluesMinusD when every lambda_i, i >= 2, equals -d.
SpectralSummary spectral_summary(const Spectrum& spec, int d, int l, double delta);

// Summary of a synthetic spectrum lambda1 = d(l-1) > lambda2 >= lambda_n (multiplicities ignored).
SpectralSummary spectral_summary_from_values(double lambda2, double lambda_n, int d, int l, double delta);

}  // namespace cliquewalk
