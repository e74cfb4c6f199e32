#include "iham/averaging.hpp"

#include <cmath>
#include <functional>

#include "iham/errors.hpp"

namespace iham {

namespace {

// 7-point Gauss–Legendre rule on [-1, 1].
constexpr int kGaussPoints = 7;
constexpr double kGaussNode[kGaussPoints] = {
    0.0,
    -0.4058451513773972, 0.4058451513773972,
    -0.7415311855993945, 0.7415311855993945,
    -0.9491079123427585, 0.9491079123427585,
};
constexpr double kGaussWeight[kGaussPoints] = {
    0.4179591836734694,
    0.3818300505051189, 0.3818300505051189,
    0.2797053914892766, 0.2797053914892766,
    0.1294849661688697, 0.1294849661688697,
};

double gauss_panel(const std::function<double(double)>& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double acc = 0.0;
  for (int i = 0; i < kGaussPoints; ++i)
    acc += kGaussWeight[i] * f(mid + half * kGaussNode[i]);
  return acc * half;
}

double adapt(const std::function<double(double)>& f, double lo, double hi, double whole,
             double abs_tol, int depth) {
  if (depth > 48)
    throw numerical_error("adaptive quadrature failed to converge on [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  const double mid = 0.5 * (lo + hi);
  const double left = gauss_panel(f, lo, mid);
  const double right = gauss_panel(f, mid, hi);
  if (std::abs(left + right - whole) <= abs_tol) return left + right;
  return adapt(f, lo, mid, left, 0.5 * abs_tol, depth + 1) +
         adapt(f, mid, hi, right, 0.5 * abs_tol, depth + 1);
}

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double rel_tol) {
  if (!(hi > lo)) return 0.0;
  const double rough = gauss_panel(f, lo, hi);
  const double abs_tol = rel_tol * std::max(std::abs(rough), 1e-300);
  return adapt(f, lo, hi, rough, abs_tol, 0);
}

void check_policy(const AveragingPolicy& policy) {
  if (!(policy.rel_tol > 0.0) || policy.rel_tol > 1e-6)
    throw validation_error("averaging tolerance must lie in (0, 1e-6]");
}

}  // namespace

double harmonic_average_interval(const PiecewiseField& beta, double x_lo, double x_hi,
                                 const AveragingPolicy& policy) {
  check_policy(policy);
  if (!(x_lo < x_hi))
    throw validation_error("harmonic_average_interval: empty interval");
  const double h = x_hi - x_lo;
  const double alpha = beta.alpha;
  const bool straddles = x_lo < alpha && alpha < x_hi;

  if (policy.mode == AveragingMode::midpoint) {
    if (straddles)
      throw validation_error(
          "midpoint averaging is undefined on an interval containing the interface");
    const double mid = x_lo + 0.5 * h;
    return x_hi <= alpha ? beta.left_value(mid) : beta.right_value(mid);
  }

  auto left_recip = [&](double x) { return 1.0 / beta.left_value(x); };
  auto right_recip = [&](double x) { return 1.0 / beta.right_value(x); };
  double integral;
  if (straddles) {
    integral = integrate(left_recip, x_lo, alpha, policy.rel_tol) +
               integrate(right_recip, alpha, x_hi, policy.rel_tol);
  } else if (x_hi <= alpha) {
    integral = integrate(left_recip, x_lo, x_hi, policy.rel_tol);
  } else {
    integral = integrate(right_recip, x_lo, x_hi, policy.rel_tol);
  }
  return h / integral;
}

double interface_average(double beta_minus, double beta_plus, double x_j, double x_j1,
                         double alpha) {
  if (!(beta_minus > 0.0) || !(beta_plus > 0.0))
    throw validation_error("interface_average: beta values must be positive");
  if (!(x_j <= alpha && alpha < x_j1))
    throw validation_error("interface_average: alpha must lie in [x_j, x_j1)");
  const double h = x_j1 - x_j;
  return 1.0 / ((x_j1 - alpha) / (beta_plus * h) + (alpha - x_j) / (beta_minus * h));
}

}  // namespace iham
