#include "cliquewalk/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cliquewalk/error.hpp"

namespace cliquewalk {

std::vector<std::pair<double, int>> Spectrum::clusters(double tol) const {
  std::vector<std::pair<double, int>> out;
  std::size_t i = 0;
  while (i < eigenvalues.size()) {
    std::size_t j = i + 1;
    double sum = eigenvalues[i];
    while (j < eigenvalues.size() && eigenvalues[j - 1] - eigenvalues[j] <= tol) sum += eigenvalues[j++];
    out.emplace_back(sum / static_cast<double>(j - i), static_cast<int>(j - i));
    i = j;
  }
  return out;
}

Spectrum eigenvalues_symmetric(const Eigen::MatrixXd& input) {
  const int n = static_cast<int>(input.rows());
  if (input.cols() != n) throw Error(Errc::NotSymmetric, "matrix is not square");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(std::abs(input(i, j) - input(j, i)) <= 1e-12))
        throw Error(Errc::NotSymmetric, "entries (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") and transpose differ");

  // Row-major working copy, symmetrized.
  std::vector<double> a(static_cast<std::size_t>(n) * n);
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  double frob2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      at(i, j) = 0.5 * (input(i, j) + input(j, i));
      frob2 += at(i, j) * at(i, j);
    }
  const double threshold = 1e-12 * std::sqrt(frob2);
  const double skip = threshold / std::max(n, 1);
  constexpr int kMaxSweeps = 50;

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
    return std::sqrt(s);
  };

  Spectrum spec;
  double off = off_norm();
  int sweep = 0;
  while (off > threshold) {
    if (sweep == kMaxSweeps)
      throw Error(Errc::NoConvergence, "Jacobi did not converge in 50 sweeps (off-diagonal norm " +
                                           std::to_string(off) + ")");
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) <= skip) continue;
        const double app = at(p, p), aqq = at(q, q);
        const double theta = (aqq - app) / (2 * apq);
        const double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(1 + theta * theta));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = t * c;
        double* rp = &a[static_cast<std::size_t>(p) * n];
        double* rq = &a[static_cast<std::size_t>(q) * n];
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = rp[k], akq = rq[k];
          const double np = c * akp - s * akq;
          const double nq = s * akp + c * akq;
          rp[k] = np;
          rq[k] = nq;
          at(k, p) = np;
          at(k, q) = nq;
        }
        rp[p] = app - t * apq;
        rq[q] = aqq + t * apq;
        rp[q] = 0;
        rq[p] = 0;
      }
    }
    off = off_norm();
  }

  spec.eigenvalues.resize(n);
  for (int i = 0; i < n; ++i) spec.eigenvalues[i] = at(i, i);
  std::sort(spec.eigenvalues.begin(), spec.eigenvalues.end(), std::greater<>());
  spec.tolerance = off;
  spec.sweeps = sweep;
  return spec;
}

namespace {

void fill_derived(SpectralSummary& s, const std::vector<double>& tail) {
  // tail: eigenvalues 2..n, any order
  const double c = (s.l - 2) * (1.0 - s.delta);
  s.lambda_prime = std::max(std::abs(s.lambda2), std::abs(s.lambda_n));
  s.lambda = std::max(std::abs(s.lambda2 - c), std::abs(s.lambda_n - c));
  bool any = false;
  s.lambda_hat = 0.0;
  s.has_minus_d = false;
  for (double x : tail) {
    if (std::abs(x + s.d) <= kEigEqTol) {
      s.has_minus_d = true;
      continue;
    }
    s.lambda_hat = any ? std::max(s.lambda_hat, std::abs(x - c)) : std::abs(x - c);
    any = true;
  }
  if (!any) throw Error(Errc::AllEigenvaluesMinusD, "every nontrivial eigenvalue equals -d");
  s.connected = s.lambda2 < s.lambda1 - kEigEqTol;
  s.bipartite = std::abs(s.lambda_n + s.lambda1) <= kEigEqTol;
  s.complete = std::abs(s.lambda2 + 1.0) <= kEigEqTol && std::abs(s.lambda_n + 1.0) <= kEigEqTol;
}

void check_args(int d, int l, double delta) {
  if (d < 1 || l < 2) throw Error(Errc::InvalidParams, "need d >= 1 and l >= 2");
  if (!(delta >= 0.0 && delta <= 1.0)) throw Error(Errc::OutOfRange, "delta must lie in [0,1]");
}

}  // namespace

SpectralSummary spectral_summary(const Spectrum& spec, int d, int l, double delta) {
  check_args(d, l, delta);
  if (spec.size() < 2) throw Error(Errc::InvalidParams, "spectrum needs at least two eigenvalues");
  SpectralSummary s;
  s.d = d;
  s.l = l;
  s.delta = delta;
  s.lambda1 = spec.eigenvalues.front();
  s.lambda2 = spec.eigenvalues[1];
  s.lambda_n = spec.eigenvalues.back();
  fill_derived(s, {spec.eigenvalues.begin() + 1, spec.eigenvalues.end()});
  return s;
}

SpectralSummary spectral_summary_from_values(double lambda2, double lambda_n, int d, int l, double delta) {
  check_args(d, l, delta);
  if (lambda_n > lambda2) throw Error(Errc::InvalidParams, "need lambda2 >= lambda_n");
  SpectralSummary s;
  s.d = d;
  s.l = l;
  s.delta = delta;
  s.lambda1 = static_cast<double>(d) * (l - 1);
  s.lambda2 = lambda2;
  s.lambda_n = lambda_n;
  fill_derived(s, {lambda2, lambda_n});
  return s;
}

}  // namespace cliquewalk
