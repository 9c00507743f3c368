#include <cmath>
#include <functional>
#include <limits>

#include <mpfr.h>

#include "cliquewalk/error.hpp"
#include "cliquewalk/mixing_theory.hpp"
#include "cliquewalk/spectrum.hpp"
#include "cliquewalk/walk_engine.hpp"

namespace cliquewalk {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct QkCoefficients {
  double sqrt_b;
  double c;
  double kappa;
};

QkCoefficients coefficients(int d, int l, double delta) {
  if (d < 1 || l < 2) throw Error(Errc::InvalidParams, "q_k needs d >= 1, l >= 2");
  if (!(delta >= 0.0 && delta < 1.0)) throw Error(Errc::OutOfRange, "q_k needs delta in [0,1)");
  if (d - 1 + delta <= 0.0) throw Error(Errc::OutOfRange, "q_k needs d - 1 + delta > 0");
  const double om = 1.0 - delta;
  return {std::sqrt((l - 1) * om * (d - 1 + delta)), (l - 2) * om,
          om * std::sqrt((l - 1) * om) / std::sqrt(d - 1 + delta)};
}

// Calls visit(k, log|q_k|, sign) for k = 1..k_max.
using Visitor = std::function<void(int, double, int)>;

void run_double(int k_max, double y, const QkCoefficients& q, const Visitor& visit) {
  // a = q_{k-1}, b = q_k, true values are a e^scale, b e^scale
  double a = 0.0, b = q.sqrt_b * 2 * y + q.c;
  double scale = 0.0;
  auto emit = [&](int k) {
    if (b == 0.0)
      visit(k, kNegInf, 0);
    else
      visit(k, std::log(std::abs(b)) + scale, b > 0 ? 1 : -1);
  };
  emit(1);
  if (k_max < 2) return;
  a = b;
  b = q.sqrt_b * (4 * y * y - 1) + q.c * 2 * y - q.kappa;
  emit(2);
  for (int k = 3; k <= k_max; ++k) {
    const double next = 2 * y * b - a;
    a = b;
    b = next;
    const double m = std::max(std::abs(a), std::abs(b));
    if (m > 1e150 || (m < 1e-150 && m > 0)) {
      a /= m;
      b /= m;
      scale += std::log(m);
    }
    emit(k);
  }
}

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// Recurrence at the exact exceptional point, y0 rebuilt in the working precision.
void run_exceptional(int k_max, int d, int l, double delta, const Visitor& visit) {
  const double y0d = exceptional_point(d, l, delta);
  const double z = std::abs(y0d) + std::sqrt(y0d * y0d - 1);
  const auto prec = static_cast<mpfr_prec_t>(2.0 * k_max * std::log2(z)) + 192;
  const mpfr_rnd_t rn = MPFR_RNDN;

  Mpfr om(prec), dm1(prec), sb(prec), c(prec), kappa(prec), y(prec), t(prec), u(prec);
  mpfr_set_d(om.get(), delta, rn);
  mpfr_ui_sub(om.get(), 1, om.get(), rn);  // 1 - delta
  mpfr_set_d(dm1.get(), delta, rn);
  mpfr_add_si(dm1.get(), dm1.get(), d - 1, rn);  // d - 1 + delta
  mpfr_mul_si(t.get(), om.get(), l - 1, rn);     // (l-1)(1-delta)
  mpfr_mul(sb.get(), t.get(), dm1.get(), rn);
  mpfr_sqrt(sb.get(), sb.get(), rn);           // sqrt(b)
  mpfr_mul_si(c.get(), om.get(), l - 2, rn);   // c
  mpfr_sqrt(kappa.get(), t.get(), rn);
  mpfr_mul(kappa.get(), kappa.get(), om.get(), rn);
  mpfr_sqrt(u.get(), dm1.get(), rn);
  mpfr_div(kappa.get(), kappa.get(), u.get(), rn);
  mpfr_add_si(y.get(), c.get(), d, rn);  // y0 = -(d + c) / (2 sqrt(b))
  mpfr_neg(y.get(), y.get(), rn);
  mpfr_div(y.get(), y.get(), sb.get(), rn);
  mpfr_div_ui(y.get(), y.get(), 2, rn);

  Mpfr a(prec), b(prec), next(prec), two_y(prec), lg(prec);
  mpfr_mul_ui(two_y.get(), y.get(), 2, rn);
  auto emit = [&](int k) {
    if (mpfr_zero_p(b.get())) {
      visit(k, kNegInf, 0);
      return;
    }
    mpfr_abs(lg.get(), b.get(), rn);
    mpfr_log(lg.get(), lg.get(), rn);
    visit(k, mpfr_get_d(lg.get(), rn), mpfr_sgn(b.get()) > 0 ? 1 : -1);
  };
  // q_1 = sqrt(b) 2y + c
  mpfr_mul(b.get(), sb.get(), two_y.get(), rn);
  mpfr_add(b.get(), b.get(), c.get(), rn);
  emit(1);
  if (k_max < 2) return;
  // q_2 = sqrt(b)(4y^2 - 1) + c 2y - kappa
  mpfr_set(a.get(), b.get(), rn);
  mpfr_sqr(t.get(), two_y.get(), rn);
  mpfr_sub_ui(t.get(), t.get(), 1, rn);
  mpfr_mul(b.get(), sb.get(), t.get(), rn);
  mpfr_mul(t.get(), c.get(), two_y.get(), rn);
  mpfr_add(b.get(), b.get(), t.get(), rn);
  mpfr_sub(b.get(), b.get(), kappa.get(), rn);
  emit(2);
  for (int k = 3; k <= k_max; ++k) {
    mpfr_mul(next.get(), two_y.get(), b.get(), rn);
    mpfr_sub(next.get(), next.get(), a.get(), rn);
    mpfr_swap(a.get(), b.get());
    mpfr_swap(b.get(), next.get());
    emit(k);
  }
}

void run(int k_max, double y, int d, int l, double delta, const Visitor& visit) {
  const QkCoefficients q = coefficients(d, l, delta);
  if (is_exceptional_point(y, d, l, delta))
    run_exceptional(k_max, d, l, delta, visit);
  else
    run_double(k_max, y, q, visit);
}

}  // namespace

double chebyshev_U(int k, double x) {
  if (k < -1) throw Error(Errc::InvalidParams, "U_k needs k >= -1");
  if (k == -1) return 0.0;
  double prev = 0.0, cur = 1.0;
  for (int j = 0; j < k; ++j) {
    const double next = 2 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

QkValue qk_scalar(int k, double y, int d, int l, double delta) {
  if (k < 1) throw Error(Errc::InvalidParams, "q_k needs k >= 1");
  QkValue out;
  run(k, y, d, l, delta, [&](int j, double lg, int sg) {
    if (j == k) out = {lg, sg};
  });
  return out;
}

double qk_empirical_growth(double y, int d, int l, double delta, int k_max) {
  if (k_max < 200) throw Error(Errc::InvalidParams, "empirical growth needs k_max >= 200");
  double best = kNegInf;
  const int from = k_max / 2;
  run(k_max, y, d, l, delta, [&](int j, double lg, int) {
    if (j >= from) best = std::max(best, lg / j);
  });
  return std::exp(best);
}

double mu_ik(double lambda_i, int k, int d, int l, double delta) {
  if (k < 1) throw Error(Errc::InvalidParams, "mu needs k >= 1");
  const double deg = static_cast<double>(d) * (l - 1);
  if (delta > kSimpleWalkDelta) return std::pow(lambda_i / deg, k);
  const QkCoefficients q = coefficients(d, l, delta);
  const double y = std::abs(lambda_i + d) <= kEigEqTol ? exceptional_point(d, l, delta)
                                                       : (lambda_i - q.c) / (2 * q.sqrt_b);
  const QkValue v = qk_scalar(k, y, d, l, delta);
  if (v.sign == 0) return 0.0;
  const double lg = -std::log(deg) +
                    0.5 * (k - 1) * std::log((1.0 - delta) / ((d - 1 + delta) * (l - 1))) + v.log_magnitude;
  return v.sign * std::exp(lg);
}

}  // namespace cliquewalk
