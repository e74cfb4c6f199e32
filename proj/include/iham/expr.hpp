#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

namespace iham {

/// Coordinates an expression is evaluated at. 1D callers leave `has_y`
/// false; referencing `y` then reports an unbound name. Boundary-value
/// expressions that must be constant may clear `has_x` as well.
struct EvalPoint {
  double x = 0.0;
  double y = 0.0;
  bool has_x = true;
  bool has_y = false;
};

inline EvalPoint at_x(double x) { return EvalPoint{x, 0.0, true, false}; }
inline EvalPoint at_xy(double x, double y) { return EvalPoint{x, y, true, true}; }

using ParamMap = std::map<std::string, double>;

enum class ExprKind { number, variable, parameter, negate, binary, call };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression tree; nodes are shared freely between threads.
/// Supported: decimal/scientific literals, variables `x` `y`, named
/// parameters, `+ - * / ^` (with `^` right-associative and binding
/// tighter than unary minus), and sin cos tan exp log sqrt abs.
struct Expr {
  ExprKind kind = ExprKind::number;
  double number = 0.0;   // ExprKind::number
  std::string name;      // variable / parameter / function name
  char op = 0;           // binary: one of + - * / ^
  ExprPtr lhs, rhs;      // binary children; negate and call use lhs only
};

struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t offset_);
  std::size_t offset;  ///< byte offset into the source text
};

struct eval_error : std::runtime_error {
  eval_error(const std::string& what, const std::string& subexpr_);
  std::string subexpr;  ///< unparsed form of the offending subexpression
};

/// Parse source text into an expression tree.
/// Throws parse_error (with byte offset) on syntax errors, unknown
/// function names, and unbalanced parentheses.
ExprPtr parse(const std::string& source);

/// Evaluate in IEEE double precision. Deterministic: the same tree,
/// point, and parameter map always produce a bitwise-identical result.
/// Throws eval_error on unbound names and domain errors (log of a
/// non-positive value, sqrt of a negative value, division by zero,
/// negative base raised to a non-integer power).
double eval(const Expr& e, const EvalPoint& at, const ParamMap& params);
double eval(const ExprPtr& e, const EvalPoint& at, const ParamMap& params);

/// Render a tree back to parseable text. Parenthesization is chosen so
/// that parse(unparse(t)) is structurally identical to t for any tree
/// the parser can produce. Numbers print in shortest round-trip form.
std::string unparse(const Expr& e);
std::string unparse(const ExprPtr& e);

bool structurally_equal(const Expr& a, const Expr& b);

// Programmatic constructors (tests, generated problems).
ExprPtr make_number(double v);
ExprPtr make_variable(const std::string& name);
ExprPtr make_parameter(const std::string& name);
ExprPtr make_negate(ExprPtr operand);
ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_call(const std::string& fn, ExprPtr arg);

}  // namespace iham
