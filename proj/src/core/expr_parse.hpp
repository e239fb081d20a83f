#pragma once

#include <string>

#include "func_expr.hpp"

namespace weilcalc {

// Parse error with position information for CLI diagnostics.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at column " + std::to_string(pos + 1) + ")"), column(pos) {}
  std::size_t column;
};

// Grammar: rational literals `p/q`, coordinate names, `+ - * ^` with
// nonnegative integer exponents, parentheses, and on torus models
// sin(...)/cos(...) of integer-coefficient linear combinations of
// coordinates. parse_expr(print(f)) == f on canonical forms.
FuncExpr parse_expr(const std::string& text, const ModelPtr& model);

// Parse an exact rational written as `p` or `p/q`.
Rat parse_rational(const std::string& text);

}  // namespace weilcalc
