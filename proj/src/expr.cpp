#include "iham/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace iham {

parse_error::parse_error(const std::string& what, std::size_t offset_)
    : std::runtime_error(what + " (at byte " + std::to_string(offset_) + ")"),
      offset(offset_) {}

eval_error::eval_error(const std::string& what, const std::string& subexpr_)
    : std::runtime_error(what + " in `" + subexpr_ + "`"), subexpr(subexpr_) {}

namespace {

const std::array<std::string, 7> known_functions = {
    "sin", "cos", "tan", "exp", "log", "sqrt", "abs"};

bool is_known_function(const std::string& name) {
  for (const auto& f : known_functions)
    if (f == name) return true;
  return false;
}

struct Token {
  enum Type { number, ident, op, lparen, rparen, end } type;
  double value = 0.0;    // number
  std::string text;      // ident
  char ch = 0;           // op
  std::size_t offset = 0;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  while (i < n) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      double v = 0.0;
      const char* first = src.data() + i;
      const char* last = src.data() + n;
      auto res = std::from_chars(first, last, v, std::chars_format::general);
      if (res.ec != std::errc() || res.ptr == first)
        throw parse_error("malformed number literal", i);
      out.push_back({Token::number, v, {}, 0, i});
      i = static_cast<std::size_t>(res.ptr - src.data());
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < n && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Token::ident, 0.0, src.substr(i, j - i), 0, i});
      i = j;
      continue;
    }
    if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      out.push_back({Token::op, 0.0, {}, c, i});
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Token::lparen, 0.0, {}, 0, i});
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Token::rparen, 0.0, {}, 0, i});
      ++i;
      continue;
    }
    throw parse_error(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::end, 0.0, {}, 0, n});
  return out;
}

// Grammar (precedence: ^  >  unary -  >  * /  >  + -):
//   expression := term (('+'|'-') term)*
//   term       := unary (('*'|'/') unary)*
//   unary      := '-' unary | power
//   power      := primary ('^' unary)?        (right-associative)
//   primary    := NUMBER | IDENT '(' expression ')' | IDENT | '(' expression ')'
class Parser {
 public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  ExprPtr run() {
    ExprPtr e = expression();
    if (peek().type != Token::end)
      throw parse_error("unexpected trailing input", peek().offset);
    return e;
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  bool at_op(char c) const { return peek().type == Token::op && peek().ch == c; }

  ExprPtr expression() {
    ExprPtr lhs = term();
    while (at_op('+') || at_op('-')) {
      const char op = take().ch;
      lhs = make_binary(op, lhs, term());
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (at_op('*') || at_op('/')) {
      const char op = take().ch;
      lhs = make_binary(op, lhs, unary());
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at_op('-')) {
      take();
      return make_negate(unary());
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (at_op('^')) {
      take();
      return make_binary('^', base, unary());
    }
    return base;
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.type) {
      case Token::number:
        take();
        return make_number(t.value);
      case Token::ident: {
        take();
        if (peek().type == Token::lparen) {
          if (!is_known_function(t.text))
            throw parse_error("unknown function '" + t.text + "'", t.offset);
          take();  // '('
          ExprPtr arg = expression();
          if (peek().type != Token::rparen)
            throw parse_error("expected ')' to close call to '" + t.text + "'",
                              peek().offset);
          take();
          return make_call(t.text, arg);
        }
        if (t.text == "x" || t.text == "y") return make_variable(t.text);
        return make_parameter(t.text);
      }
      case Token::lparen: {
        take();
        ExprPtr inner = expression();
        if (peek().type != Token::rparen)
          throw parse_error("expected ')'", peek().offset);
        take();
        return inner;
      }
      case Token::rparen:
        throw parse_error("unbalanced ')'", t.offset);
      case Token::op:
        throw parse_error(std::string("unexpected operator '") + t.ch + "'", t.offset);
      case Token::end:
        throw parse_error("unexpected end of expression", t.offset);
    }
    throw parse_error("unexpected token", t.offset);  // unreachable
  }
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::binary:
      if (e.op == '^') return 4;
      if (e.op == '*' || e.op == '/') return 2;
      return 1;  // + -
    case ExprKind::negate:
      return 3;
    default:
      return 5;  // atoms and calls
  }
}

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void unparse_into(const Expr& e, std::string& out) {
  auto wrapped = [&out](const Expr& child, bool parens) {
    if (parens) out.push_back('(');
    unparse_into(child, out);
    if (parens) out.push_back(')');
  };
  switch (e.kind) {
    case ExprKind::number:
      out += format_number(e.number);
      return;
    case ExprKind::variable:
    case ExprKind::parameter:
      out += e.name;
      return;
    case ExprKind::negate:
      out.push_back('-');
      wrapped(*e.lhs, precedence(*e.lhs) <= 3);
      return;
    case ExprKind::call:
      out += e.name;
      out.push_back('(');
      unparse_into(*e.lhs, out);
      out.push_back(')');
      return;
    case ExprKind::binary: {
      const int p = precedence(e);
      if (e.op == '^') {
        // right-associative; the parser's exponent slot admits unary minus
        wrapped(*e.lhs, precedence(*e.lhs) <= 4);
        out.push_back('^');
        wrapped(*e.rhs, precedence(*e.rhs) < 3);
      } else {
        wrapped(*e.lhs, precedence(*e.lhs) < p);
        out.push_back(' ');
        out.push_back(e.op);
        out.push_back(' ');
        // parenthesize equal precedence on the right to preserve left
        // associativity structurally
        wrapped(*e.rhs, precedence(*e.rhs) <= p);
      }
      return;
    }
  }
}

bool is_integer_valued(double v) { return std::isfinite(v) && v == std::floor(v); }

double eval_node(const Expr& e, const EvalPoint& at, const ParamMap& params) {
  switch (e.kind) {
    case ExprKind::number:
      return e.number;
    case ExprKind::variable:
      if (e.name == "x") {
        if (!at.has_x) throw eval_error("unbound variable 'x'", unparse(e));
        return at.x;
      }
      if (!at.has_y) throw eval_error("unbound variable 'y'", unparse(e));
      return at.y;
    case ExprKind::parameter: {
      auto it = params.find(e.name);
      if (it == params.end())
        throw eval_error("unbound parameter '" + e.name + "'", unparse(e));
      return it->second;
    }
    case ExprKind::negate:
      return -eval_node(*e.lhs, at, params);
    case ExprKind::binary: {
      const double a = eval_node(*e.lhs, at, params);
      const double b = eval_node(*e.rhs, at, params);
      switch (e.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/':
          if (b == 0.0) throw eval_error("division by zero", unparse(e));
          return a / b;
        case '^':
          if (a < 0.0 && !is_integer_valued(b))
            throw eval_error("negative base with non-integer exponent", unparse(e));
          if (a == 0.0 && b < 0.0)
            throw eval_error("zero base with negative exponent", unparse(e));
          return std::pow(a, b);
      }
      throw eval_error("unknown operator", unparse(e));  // unreachable
    }
    case ExprKind::call: {
      const double v = eval_node(*e.lhs, at, params);
      if (e.name == "sin") return std::sin(v);
      if (e.name == "cos") return std::cos(v);
      if (e.name == "tan") return std::tan(v);
      if (e.name == "exp") return std::exp(v);
      if (e.name == "log") {
        if (v <= 0.0) throw eval_error("log of a non-positive value", unparse(e));
        return std::log(v);
      }
      if (e.name == "sqrt") {
        if (v < 0.0) throw eval_error("sqrt of a negative value", unparse(e));
        return std::sqrt(v);
      }
      if (e.name == "abs") return std::fabs(v);
      throw eval_error("unknown function '" + e.name + "'", unparse(e));  // unreachable
    }
  }
  throw eval_error("malformed expression node", "?");  // unreachable
}

}  // namespace

ExprPtr parse(const std::string& source) {
  bool all_space = true;
  for (char c : source)
    if (!std::isspace(static_cast<unsigned char>(c))) {
      all_space = false;
      break;
    }
  if (source.empty() || all_space) throw parse_error("empty expression", 0);
  const auto toks = tokenize(source);
  Parser p(toks);
  return p.run();
}

double eval(const Expr& e, const EvalPoint& at, const ParamMap& params) {
  return eval_node(e, at, params);
}

double eval(const ExprPtr& e, const EvalPoint& at, const ParamMap& params) {
  return eval_node(*e, at, params);
}

std::string unparse(const Expr& e) {
  std::string out;
  unparse_into(e, out);
  return out;
}

std::string unparse(const ExprPtr& e) { return unparse(*e); }

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::number: {
      if (std::isnan(a.number) && std::isnan(b.number)) return true;
      return a.number == b.number;
    }
    case ExprKind::variable:
    case ExprKind::parameter:
      return a.name == b.name;
    case ExprKind::negate:
      return structurally_equal(*a.lhs, *b.lhs);
    case ExprKind::call:
      return a.name == b.name && structurally_equal(*a.lhs, *b.lhs);
    case ExprKind::binary:
      return a.op == b.op && structurally_equal(*a.lhs, *b.lhs) &&
             structurally_equal(*a.rhs, *b.rhs);
  }
  return false;
}

ExprPtr make_number(double v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::number;
  e->number = v;
  return e;
}

ExprPtr make_variable(const std::string& name) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::variable;
  e->name = name;
  return e;
}

ExprPtr make_parameter(const std::string& name) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::parameter;
  e->name = name;
  return e;
}

ExprPtr make_negate(ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::negate;
  e->lhs = std::move(operand);
  return e;
}

ExprPtr make_binary(char op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::binary;
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

ExprPtr make_call(const std::string& fn, ExprPtr arg) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::call;
  e->name = fn;
  e->lhs = std::move(arg);
  return e;
}

}  // namespace iham
