#ifndef RIORDAN_PARSER_HPP
#define RIORDAN_PARSER_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "riordan/series.hpp"

namespace riordan {

namespace ast {

enum class Kind { number, zeta, var, neg, add, sub, mul, div, pow, call };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Kind kind;
    Rational value;                // number
    long exponent = 0;             // pow, and root(_, b)
    std::string func;              // call
    std::vector<NodePtr> children;
    std::size_t begin = 0, end = 0; // byte span in the source text
};

} // namespace ast

/// Parsed series expression over: rational literals, `w` (the cyclotomic
/// generator), `x`, operators + - * / ^ (integer exponents), parentheses,
/// and inv(e), sqrt(e), root(e, b), log(e), exp(e), comp(e1, e2), compinv(e).
class SeriesExpr {
public:
    static SeriesExpr parse(std::string_view text); // throws SyntaxError

    /// Canonical form with minimal parentheses; parse(str()).str() == str().
    std::string str() const;

    /// Exact evaluation at the given precision; `w` binds to zeta of the
    /// field. Throws DomainError naming the offending sub-expression.
    Series eval(const FieldRef& field, int precision) const;

    /// True when the expression mentions the variable x.
    bool mentions_var() const;

    const ast::NodePtr& root() const noexcept { return root_; }

private:
    SeriesExpr(ast::NodePtr root, std::string source);

    ast::NodePtr root_;
    std::string source_;
};

Series parse_series(std::string_view text, const FieldRef& field, int precision);

/// Parses a constant expression (no `x`) into a scalar.
Scalar parse_scalar(std::string_view text, const FieldRef& field);

} // namespace riordan

#endif
