#pragma once

#include <string>
#include <utility>
#include <vector>

#include "iham/expr.hpp"

namespace iham {

/// Scalar field split at the interface x = alpha: `left` is valid for
/// x < alpha and `right` for x > alpha. Evaluation at x == alpha takes
/// the left branch, matching the half-open cell ownership x_j <= alpha
/// < x_{j+1} used by the discretization; one-sided limits are available
/// explicitly.
struct PiecewiseField {
  ExprPtr left, right;
  double alpha = 0.0;
  ParamMap params;

  double value(double x) const;
  double value(double x, double y) const;
  double left_value(double x) const;
  double left_value(double x, double y) const;
  double right_value(double x) const;
  double right_value(double x, double y) const;
  double left_limit() const;            ///< left branch at alpha
  double left_limit(double y) const;
  double right_limit() const;           ///< right branch at alpha
  double right_limit(double y) const;
};

PiecewiseField make_field(const std::string& left_src, const std::string& right_src,
                          double alpha, ParamMap params = {});

/// Prescribed interface data [u] and [beta u_x]; stored as expressions
/// in y so 2D problems can vary along the interface line. 1D problems
/// use constants.
struct JumpSpec {
  ExprPtr jump_u, jump_flux;
  ParamMap params;

  double u() const;
  double u(double y) const;
  double flux() const;
  double flux(double y) const;
};

JumpSpec make_jumps(double jump_u, double jump_flux);
JumpSpec make_jumps(const std::string& jump_u_src, const std::string& jump_flux_src,
                    ParamMap params = {});

/// Convert delta-source strengths (v on the delta, w on its derivative)
/// to prescribed jumps: [u] = 2w/(beta- + beta+), [beta u_x] = v.
std::pair<double, double> jumps_from_delta(double v, double w, double beta_minus,
                                           double beta_plus);

struct InterfaceProblem1D {
  double a = 0.0, b = 1.0;
  double alpha = 0.5;
  PiecewiseField beta, sigma, source;
  JumpSpec jumps;
  double u_a = 0.0, u_b = 0.0;  // Dirichlet values at the endpoints
};

struct InterfaceProblem2D {
  double a = 0.0, b = 1.0, c = 0.0, d = 1.0;  // rectangle [a,b] x [c,d]
  double alpha = 0.5;                          // interface line x = alpha
  PiecewiseField beta, sigma, source;          // fields over (x, y)
  JumpSpec jumps;                              // expressions in y
  PiecewiseField boundary;                     // Dirichlet trace over (x, y)
};

/// Returns human-readable violations; empty means the problem is valid.
/// Checks a < alpha < b, beta > 0 on a 1000-point sampling of each side,
/// and sigma >= 0 on the same sampling.
std::vector<std::string> validate(const InterfaceProblem1D& p);
std::vector<std::string> validate(const InterfaceProblem2D& p);

struct ManufacturedCase {
  std::string name;
  InterfaceProblem1D problem;
  PiecewiseField exact;
  ParamMap params;
};

struct ManufacturedCase2D {
  std::string name;
  InterfaceProblem2D problem;
  PiecewiseField exact;
  ParamMap params;
};

std::vector<std::string> catalog_names();                    // ex1 ex2 ex3 ex2d
std::string catalog_signature(const std::string& name);      // e.g. "ex1(alpha, k1, k2)"
bool is_case_2d(const std::string& name);

/// Built-in manufactured cases. Throws usage_error for an unknown name
/// or a missing required parameter.
ManufacturedCase catalog_case(const std::string& name, const ParamMap& params);
ManufacturedCase2D catalog_case_2d(const std::string& name, const ParamMap& params);

}  // namespace iham
