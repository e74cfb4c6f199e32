#include "iham/problem.hpp"

#include <cmath>
#include <sstream>

#include "iham/errors.hpp"

namespace iham {

double PiecewiseField::value(double x) const {
  return eval(x <= alpha ? left : right, at_x(x), params);
}

double PiecewiseField::value(double x, double y) const {
  return eval(x <= alpha ? left : right, at_xy(x, y), params);
}

double PiecewiseField::left_value(double x) const { return eval(left, at_x(x), params); }
double PiecewiseField::left_value(double x, double y) const {
  return eval(left, at_xy(x, y), params);
}
double PiecewiseField::right_value(double x) const { return eval(right, at_x(x), params); }
double PiecewiseField::right_value(double x, double y) const {
  return eval(right, at_xy(x, y), params);
}
double PiecewiseField::left_limit() const { return left_value(alpha); }
double PiecewiseField::left_limit(double y) const { return left_value(alpha, y); }
double PiecewiseField::right_limit() const { return right_value(alpha); }
double PiecewiseField::right_limit(double y) const { return right_value(alpha, y); }

PiecewiseField make_field(const std::string& left_src, const std::string& right_src,
                          double alpha, ParamMap params) {
  PiecewiseField f;
  f.left = parse(left_src);
  f.right = parse(right_src);
  f.alpha = alpha;
  f.params = std::move(params);
  return f;
}

namespace {
const EvalPoint no_coords{0.0, 0.0, false, false};
}

double JumpSpec::u() const { return eval(jump_u, no_coords, params); }
double JumpSpec::u(double y) const {
  return eval(jump_u, EvalPoint{0.0, y, false, true}, params);
}
double JumpSpec::flux() const { return eval(jump_flux, no_coords, params); }
double JumpSpec::flux(double y) const {
  return eval(jump_flux, EvalPoint{0.0, y, false, true}, params);
}

JumpSpec make_jumps(double jump_u, double jump_flux) {
  JumpSpec j;
  j.jump_u = make_number(jump_u);
  j.jump_flux = make_number(jump_flux);
  return j;
}

JumpSpec make_jumps(const std::string& jump_u_src, const std::string& jump_flux_src,
                    ParamMap params) {
  JumpSpec j;
  j.jump_u = parse(jump_u_src);
  j.jump_flux = parse(jump_flux_src);
  j.params = std::move(params);
  return j;
}

std::pair<double, double> jumps_from_delta(double v, double w, double beta_minus,
                                           double beta_plus) {
  if (!(beta_minus > 0.0) || !(beta_plus > 0.0))
    throw validation_error("jumps_from_delta: beta values must be positive");
  return {2.0 * w / (beta_minus + beta_plus), v};
}

namespace {

constexpr int kSamplesPerSide = 1000;

std::string describe(const char* what, double x, double v) {
  std::ostringstream os;
  os << what << " at x = " << x << " (value " << v << ")";
  return os.str();
}

std::string describe_xy(const char* what, double x, double y, double v) {
  std::ostringstream os;
  os << what << " at (x, y) = (" << x << ", " << y << ") (value " << v << ")";
  return os.str();
}

/// Sample a branch at interior points of (lo, hi); report the first
/// point violating the predicate so the message stays short.
template <class Eval>
void check_side(std::vector<std::string>& out, Eval&& branch_value, double lo, double hi,
                const char* positive_msg, const char* nonneg_msg, bool require_positive) {
  for (int i = 0; i < kSamplesPerSide; ++i) {
    const double x = lo + (hi - lo) * (i + 0.5) / kSamplesPerSide;
    const double v = branch_value(x);
    if (require_positive) {
      if (!(v > 0.0)) {
        out.push_back(describe(positive_msg, x, v));
        return;
      }
    } else if (!(v >= 0.0)) {
      out.push_back(describe(nonneg_msg, x, v));
      return;
    }
  }
}

}  // namespace

std::vector<std::string> validate(const InterfaceProblem1D& p) {
  std::vector<std::string> out;
  if (!(p.a < p.alpha && p.alpha < p.b)) {
    std::ostringstream os;
    os << "interface outside domain: alpha = " << p.alpha << " not inside (" << p.a << ", "
       << p.b << ")";
    out.push_back(os.str());
    return out;  // side sampling is meaningless without a < alpha < b
  }
  check_side(out, [&](double x) { return p.beta.left_value(x); }, p.a, p.alpha,
             "β non-positive on the left branch", nullptr, true);
  check_side(out, [&](double x) { return p.beta.right_value(x); }, p.alpha, p.b,
             "β non-positive on the right branch", nullptr, true);
  check_side(out, [&](double x) { return p.sigma.left_value(x); }, p.a, p.alpha, nullptr,
             "σ negative on the left branch", false);
  check_side(out, [&](double x) { return p.sigma.right_value(x); }, p.alpha, p.b, nullptr,
             "σ negative on the right branch", false);
  return out;
}

std::vector<std::string> validate(const InterfaceProblem2D& p) {
  std::vector<std::string> out;
  if (!(p.a < p.alpha && p.alpha < p.b)) {
    std::ostringstream os;
    os << "interface outside domain: alpha = " << p.alpha << " not inside (" << p.a << ", "
       << p.b << ")";
    out.push_back(os.str());
    return out;
  }
  if (!(p.c < p.d)) {
    out.push_back("empty rectangle: c >= d");
    return out;
  }
  // 40 x 25 interior grid per side keeps the total at 1000 points each.
  const int nx = 40, ny = 25;
  auto scan = [&](double lo, double hi, bool left_side) {
    for (int i = 0; i < nx; ++i) {
      const double x = lo + (hi - lo) * (i + 0.5) / nx;
      for (int jj = 0; jj < ny; ++jj) {
        const double y = p.c + (p.d - p.c) * (jj + 0.5) / ny;
        const double bv =
            left_side ? p.beta.left_value(x, y) : p.beta.right_value(x, y);
        if (!(bv > 0.0)) {
          out.push_back(describe_xy(left_side ? "β non-positive on the left branch"
                                              : "β non-positive on the right branch",
                                    x, y, bv));
          return;
        }
        const double sv =
            left_side ? p.sigma.left_value(x, y) : p.sigma.right_value(x, y);
        if (!(sv >= 0.0)) {
          out.push_back(describe_xy(left_side ? "σ negative on the left branch"
                                              : "σ negative on the right branch",
                                    x, y, sv));
          return;
        }
      }
    }
  };
  scan(p.a, p.alpha, true);
  scan(p.alpha, p.b, false);
  return out;
}

namespace {

double require_param(const ParamMap& params, const std::string& name,
                     const std::string& case_name) {
  auto it = params.find(name);
  if (it == params.end())
    throw usage_error("case " + case_name + ": missing parameter " + name);
  return it->second;
}

ParamMap pick(const ParamMap& params, std::initializer_list<const char*> names,
              const std::string& case_name) {
  ParamMap out;
  for (const char* n : names) out[n] = require_param(params, n, case_name);
  return out;
}

ManufacturedCase build_ex1(const ParamMap& user) {
  ManufacturedCase c;
  c.name = "ex1";
  c.params = pick(user, {"alpha", "k1", "k2"}, c.name);
  const double alpha = c.params.at("alpha");
  const double k1 = c.params.at("k1");
  const double k2 = c.params.at("k2");

  InterfaceProblem1D& p = c.problem;
  p.a = 0.0;
  p.b = 1.0;
  p.alpha = alpha;
  p.beta = make_field("1 + x^2", "log(2 + x)", alpha);
  p.sigma = make_field("0", "0", alpha);
  p.source = make_field(
      "2 * x * k1 * cos(k1 * x) - (1 + x^2) * k1^2 * sin(k1 * x)",
      "-k2 * sin(k2 * x) / (2 + x) - log(2 + x) * k2^2 * cos(k2 * x)", alpha, c.params);
  const double ju = std::cos(k2 * alpha) - std::sin(k1 * alpha);
  const double jf = -std::log(2.0 + alpha) * k2 * std::sin(k2 * alpha) -
                    (1.0 + alpha * alpha) * k1 * std::cos(k1 * alpha);
  p.jumps = make_jumps(ju, jf);

  c.exact = make_field("sin(k1 * x)", "cos(k2 * x)", alpha, c.params);
  p.u_a = c.exact.left_value(p.a);
  p.u_b = c.exact.right_value(p.b);
  return c;
}

ManufacturedCase build_ex2(const ParamMap& user) {
  ManufacturedCase c;
  c.name = "ex2";
  c.params = pick(user, {"alpha", "k1", "k2", "beta_minus", "beta_plus"}, c.name);
  const double alpha = c.params.at("alpha");
  const double k1 = c.params.at("k1");
  const double k2 = c.params.at("k2");
  const double bm = c.params.at("beta_minus");
  const double bp = c.params.at("beta_plus");

  InterfaceProblem1D& p = c.problem;
  p.a = 0.0;
  p.b = 1.0;
  p.alpha = alpha;
  p.beta = make_field("beta_minus", "beta_plus", alpha, c.params);
  p.sigma = make_field("0", "0", alpha);
  p.source = make_field("-beta_minus * k1^2 * sin(k1 * x)",
                        "-beta_plus * k2^2 * cos(k2 * x)", alpha, c.params);
  const double ju = std::cos(k2 * alpha) - std::sin(k1 * alpha);
  const double jf = -bp * k2 * std::sin(k2 * alpha) - bm * k1 * std::cos(k1 * alpha);
  p.jumps = make_jumps(ju, jf);

  c.exact = make_field("sin(k1 * x)", "cos(k2 * x)", alpha, c.params);
  p.u_a = c.exact.left_value(p.a);
  p.u_b = c.exact.right_value(p.b);
  return c;
}

ManufacturedCase build_ex3(const ParamMap& user) {
  ManufacturedCase c;
  c.name = "ex3";
  c.params = pick(user, {"alpha"}, c.name);
  const double alpha = c.params.at("alpha");

  InterfaceProblem1D& p = c.problem;
  p.a = 0.0;
  p.b = 1.0;
  p.alpha = alpha;
  p.beta = make_field("1 + x^2", "1.1", alpha);
  p.sigma = make_field("x", "x", alpha);
  // Sources are derived from the stated solution branches so that the
  // case genuinely solves its own equation: (βu')' − σu with u = x²
  // gives 2 + 6x² − x³, and with u = x⁴, β = 1.1 gives 13.2x² − x⁵.
  p.source = make_field("2 + 6 * x^2 - x^3", "13.2 * x^2 - x^5", alpha);
  const double a2 = alpha * alpha;
  const double ju = a2 * a2 - a2;
  const double jf =
      4.4 * a2 * alpha - 2.0 * alpha * (1.0 + a2);  // 1.1·4α³ − (1+α²)·2α
  p.jumps = make_jumps(ju, jf);

  c.exact = make_field("x^2", "x^4", alpha);
  p.u_a = c.exact.left_value(p.a);
  p.u_b = c.exact.right_value(p.b);
  return c;
}

ManufacturedCase2D build_ex2d(const ParamMap& user) {
  ManufacturedCase2D c;
  c.name = "ex2d";
  c.params = pick(user, {"alpha", "k1", "k2", "beta_minus", "beta_plus"}, c.name);
  const double alpha = c.params.at("alpha");

  InterfaceProblem2D& p = c.problem;
  p.a = 0.0;
  p.b = 1.0;
  p.c = 0.0;
  p.d = 1.0;
  p.alpha = alpha;
  p.beta = make_field("beta_minus", "beta_plus", alpha, c.params);
  p.sigma = make_field("0", "0", alpha);
  p.source = make_field("-beta_minus * (k1^2 + 1) * sin(k1 * x) * cos(y)",
                        "-beta_plus * (k2^2 + 1) * cos(k2 * x) * cos(y)", alpha, c.params);
  p.jumps = make_jumps("(cos(k2 * alpha) - sin(k1 * alpha)) * cos(y)",
                       "(-beta_plus * k2 * sin(k2 * alpha) - beta_minus * k1 * "
                       "cos(k1 * alpha)) * cos(y)",
                       c.params);
  c.exact = make_field("sin(k1 * x) * cos(y)", "cos(k2 * x) * cos(y)", alpha, c.params);
  p.boundary = c.exact;
  return c;
}

}  // namespace

std::vector<std::string> catalog_names() { return {"ex1", "ex2", "ex3", "ex2d"}; }

std::string catalog_signature(const std::string& name) {
  if (name == "ex1") return "ex1(alpha, k1, k2)";
  if (name == "ex2") return "ex2(alpha, k1, k2, beta_minus, beta_plus)";
  if (name == "ex3") return "ex3(alpha)";
  if (name == "ex2d") return "ex2d(alpha, k1, k2, beta_minus, beta_plus)";
  throw usage_error("unknown case name: " + name);
}

bool is_case_2d(const std::string& name) {
  if (name == "ex2d") return true;
  if (name == "ex1" || name == "ex2" || name == "ex3") return false;
  throw usage_error("unknown case name: " + name);
}

ManufacturedCase catalog_case(const std::string& name, const ParamMap& params) {
  if (name == "ex1") return build_ex1(params);
  if (name == "ex2") return build_ex2(params);
  if (name == "ex3") return build_ex3(params);
  if (name == "ex2d")
    throw usage_error("case ex2d is two-dimensional; use catalog_case_2d");
  throw usage_error("unknown case name: " + name);
}

ManufacturedCase2D catalog_case_2d(const std::string& name, const ParamMap& params) {
  if (name == "ex2d") return build_ex2d(params);
  if (name == "ex1" || name == "ex2" || name == "ex3")
    throw usage_error("case " + name + " is one-dimensional; use catalog_case");
  throw usage_error("unknown case name: " + name);
}

}  // namespace iham
