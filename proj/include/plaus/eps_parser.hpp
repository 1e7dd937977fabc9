#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "plaus/error.hpp"
#include "plaus/eps_rational.hpp"

namespace plaus {

/// Syntax error in an eps-expression; position is a 0-based byte offset.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& message)
        : Error(Errc::parse, "syntax error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Expression tree for the eps-expression surface syntax.
struct EpsExpr {
    enum class Kind { number, eps, neg, add, sub, mul, div, pow };

    Kind kind = Kind::number;
    BigRational value;      // number
    unsigned exponent = 0;  // pow
    std::unique_ptr<EpsExpr> lhs;
    std::unique_ptr<EpsExpr> rhs;
};

/// Grammar (whitespace allowed between tokens):
///
///     Expr     := Term (('+' | '-') Term)*
///     Term     := Pow (('*' | '/') Pow)*
///     Pow      := Atom ('^' UInt)?
///     Atom     := Rational | 'eps' | '(' Expr ')' | '-' Atom
///     Rational := Int ('/' UInt)?
///
/// Int may carry a leading '-'. A rational literal is a single atom, so
/// "2/3^2" is (2/3)^2.
std::unique_ptr<EpsExpr> parse_eps_ast(std::string_view text);

EpsRational evaluate(const EpsExpr& expr);

/// parse_eps_ast followed by evaluate.
EpsRational parse_eps_expr(std::string_view text);

}  // namespace plaus
