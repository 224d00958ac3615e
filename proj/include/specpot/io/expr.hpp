#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "specpot/algebra/tower.hpp"

namespace specpot {

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Integer, Symbol, Neg, Add, Sub, Mul, Div, Pow, Call };
    Kind kind = Kind::Integer;
    Integer value;      // Integer
    std::string name;   // Symbol, Call
    long exponent = 0;  // Pow
    std::vector<Expr> args;
};

/// Grammar, loosest first: sums (+ -), products (* /), unary minus, powers
/// with an integer-literal exponent, then literals, the symbols z E nu a b c d t,
/// calls ln(...) sqrt(...) exp(...) and parentheses. Throws SyntaxError.
Expr parse_expr(std::string_view text);

/// Minimal-parenthesis print; inverse of parse_expr on canonical strings.
std::string print_expr(const Expr& e);

/// Throws NonRationalCoefficient when a function call is present.
RatFun to_ratfun(const Expr& e);
RatFun parse_ratfun(std::string_view text);

/// sqrt(z) -> r, ln(z) -> L, exp(f) -> carrier e^f with f rational.
TowerElem to_tower(const Expr& e);

/// Double-precision value with z = x and every other symbol unbound.
/// nullopt on division by zero or a logarithm/root outside its domain.
std::optional<double> evaluate_at(const Expr& e, double x);

} // namespace specpot
