#include <cmath>

#include "cliquewalk/error.hpp"
#include "cliquewalk/walk_engine.hpp"

namespace cliquewalk {

std::vector<RationalMatrix> Rk_recurrence_exact(const CliqueRegularGraph& crg, const Rational& delta, int k_max) {
  if (k_max < 1) throw Error(Errc::InvalidParams, "k_max must be >= 1");
  if (delta < 0 || delta > 1) throw Error(Errc::OutOfRange, "delta must lie in [0,1]");
  const int n = crg.order(), d = crg.d(), l = crg.l();
  const Rational om = 1 - delta;
  const Rational c = (l - 2) * om;
  const Rational b = (l - 1) * om * (d - 1 + delta);
  const Graph& g = crg.graph();

  // M * A, using the neighbor lists of A
  auto times_adj = [&](const RationalMatrix& m) {
    RationalMatrix out(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rational s = 0;
        for (int w : g.neighbors(j)) s += m(i, w);
        out(i, j) = s;
      }
    return out;
  };

  RationalMatrix a(n);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a(u, v) = 1;

  std::vector<RationalMatrix> seq{a};
  if (k_max >= 2) {
    RationalMatrix r2 = times_adj(a);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) r2(i, j) -= c * a(i, j);
      r2(i, i) -= Rational(d * (l - 1)) * om;
    }
    seq.push_back(std::move(r2));
  }
  for (int k = 2; k < k_max; ++k) {
    const RationalMatrix& rk = seq[k - 1];
    const RationalMatrix& rkm1 = seq[k - 2];
    RationalMatrix next = times_adj(rk);
    for (std::size_t i = 0; i < next.a.size(); ++i) next.a[i] -= c * rk.a[i] + b * rkm1.a[i];
    seq.push_back(std::move(next));
  }
  return seq;
}

WalkCounts enumerate_weighted_walks(const CliqueRegularGraph& crg, int k) {
  const int n = crg.order();
  if (n > 30 || k > 6) throw Error(Errc::TooLarge, "walk enumeration limited to n <= 30, k <= 6");
  if (k < 1) throw Error(Errc::InvalidParams, "k must be >= 1");
  WalkCounts wc;
  wc.n = n;
  wc.k = k;
  wc.count.assign(static_cast<std::size_t>(n) * n * k, 0);

  int start = 0;
  // x: current vertex, prev: clique of the previous step, step: steps taken, m: stays so far
  auto step = [&](auto&& self, int x, int prev, int taken, int m) -> void {
    if (taken == k) {
      ++wc.count[(static_cast<std::size_t>(start) * n + x) * k + m];
      return;
    }
    for (int K : crg.cliques_of(x)) {
      const int m2 = m + (K == prev ? 1 : 0);
      for (int y : crg.clique(K))
        if (y != x) self(self, y, K, taken + 1, m2);
    }
  };
  for (start = 0; start < n; ++start) step(step, start, -1, 0, 0);
  return wc;
}

Eigen::MatrixXd brute_force_weighted_walks(const CliqueRegularGraph& crg, double delta, int k) {
  const WalkCounts wc = enumerate_weighted_walks(crg, k);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(wc.n, wc.n);
  for (int u = 0; u < wc.n; ++u)
    for (int v = 0; v < wc.n; ++v) {
      double s = 0.0;
      for (int m = 0; m < k; ++m) s += static_cast<double>(wc.at(u, v, m)) * std::pow(delta, m);
      out(u, v) = s;
    }
  return out;
}

RationalMatrix brute_force_weighted_walks_exact(const CliqueRegularGraph& crg, const Rational& delta, int k) {
  const WalkCounts wc = enumerate_weighted_walks(crg, k);
  std::vector<Rational> powers{Rational(1)};
  for (int m = 1; m < k; ++m) powers.push_back(powers.back() * delta);
  RationalMatrix out(wc.n);
  for (int u = 0; u < wc.n; ++u)
    for (int v = 0; v < wc.n; ++v) {
      Rational s = 0;
      for (int m = 0; m < k; ++m)
        if (auto c = wc.at(u, v, m)) s += Rational(c) * powers[m];
      out(u, v) = s;
    }
  return out;
}

}  // namespace cliquewalk
