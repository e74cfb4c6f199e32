#pragma once

#include "iham/problem.hpp"

namespace iham {

enum class AveragingMode { midpoint, integral_harmonic };

/// How interval coefficients are formed: sample at the midpoint, or
/// integrate the reciprocal with adaptive quadrature. The tolerance is
/// relative and must lie in (0, 1e-6].
struct AveragingPolicy {
  AveragingMode mode = AveragingMode::midpoint;
  double rel_tol = 1e-12;
};

/// Harmonic average of beta over [x_lo, x_hi]: ((1/h) ∫ 1/β dx)⁻¹.
/// Integral mode pre-splits at the interface and integrates each side
/// with an adaptive 7-point Gauss rule to the policy tolerance.
/// Midpoint mode returns β at the interval midpoint and refuses
/// intervals that straddle the interface.
double harmonic_average_interval(const PiecewiseField& beta, double x_lo, double x_hi,
                                 const AveragingPolicy& policy);

/// Interface-weighted harmonic average over [x_j, x_j1] with the
/// interface at alpha ∈ [x_j, x_j1):
///   β̄ = ( (x_j1 − α)/(β⁺ h) + (α − x_j)/(β⁻ h) )⁻¹,  h = x_j1 − x_j.
/// Coincides with the integral harmonic average when β is constant on
/// each side.
double interface_average(double beta_minus, double beta_plus, double x_j, double x_j1,
                         double alpha);

}  // namespace iham
