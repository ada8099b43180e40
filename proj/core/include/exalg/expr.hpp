#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "exalg/multivector.hpp"

namespace exalg {

enum class OutputMode { Text, Json };

struct SessionConfig {
  int dimension = 3;
  Field field = Field::Real;
  Scalar orientation_unit = Scalar(1.0);
  double tolerance = kCoeffTol;
  OutputMode output = OutputMode::Text;
};

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error("parse error at position " + std::to_string(pos) +
                           ": " + msg),
        position(pos) {}
};

struct EvalError : std::runtime_error {
  std::string stage;
  EvalError(std::string stage_, const std::string& msg)
      : std::runtime_error(stage_ + ": " + msg), stage(std::move(stage_)) {}
};

enum class BinOp { Add, Sub, Wedge, LContr, RContr, Regr, ScalarMul };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Basis, Neg, Binary, Call };

  Kind kind = Kind::Number;

  // Number: value with an imaginary-unit suffix flag, kept verbatim so
  // printing round-trips.
  double number = 0;
  bool imaginary = false;

  // Basis literal, ascending-or-not 1-based indices as written.
  std::vector<int> basis_indices;

  // Neg
  ExprPtr operand;

  // Binary
  BinOp op = BinOp::Add;
  ExprPtr lhs, rhs;

  // Call: name, arguments, and for conv() the convention selector.
  std::string callee;
  std::string convention;
  std::vector<ExprPtr> args;
};

// Parses the expression grammar
//   expr  := term (('+'|'-') term)*
//   term  := unary (('^'|'<<'|'>>'|'&'|'*') unary)*
//   unary := '-' unary | atom
//   atom  := number ['i'] | basis | ident '(' args ')' | '(' expr ')'
//   basis := 'e' digit+ | 'e{' int (',' int)* '}'
// Validates basis indices against the session dimension and call arities.
// The four products share one precedence level; when a chain mixes two
// distinct ones without parentheses, *mixed_chain_warning is set so the CLI
// can warn.
ExprPtr parse(std::string_view src, const SessionConfig& cfg,
              bool* mixed_chain_warning = nullptr);

// Canonical fully parenthesized rendering; parse(print(e)) reproduces e.
std::string print_expr(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace exalg
