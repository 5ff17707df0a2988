#pragma once

#include "ghl/ratfun.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ghl {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset(offset) {}
    std::size_t offset;
};

struct ExprNode {
    enum Kind { Integer, Decimal, Parameter, Basis, Add, Sub, Mul, Div, Pow, Neg };
    Kind kind = Integer;
    std::string text;      // digits, decimal literal or identifier
    unsigned exponent = 0; // Pow
    int basis = -1;        // Basis: index of e<k>
    std::size_t offset = 0;
    std::vector<ExprNode> kids;
};

struct ParseOptions {
    // nullptr: any identifier is accepted as a parameter
    const std::set<std::string>* declared = nullptr;
    bool allow_basis = false; // e0, e1, ... as basis vectors
    bool allow_decimal = true;
};

// expr := term (('+'|'-') term)*
// term := factor (('*'|'/') factor)*
// factor := base ('^' nonneg-int)?
// base := integer | decimal | identifier | '(' expr ')' | '-' factor
ExprNode parse_expression(std::string_view text, const ParseOptions& opts = {});

bool is_basis_token(std::string_view id, int* index = nullptr);

// Scalar evaluation; Basis nodes are rejected.
template <class K>
RatFun<K> eval_scalar(const ExprNode& n);

// parse_expression + eval_scalar
template <class K>
RatFun<K> parse_scalar(std::string_view text, const std::set<std::string>* declared = nullptr);

// Linear combination of basis vectors with scalar coefficients, e.g.
// "alpha*e4 + beta*e5"; dimension n. Throws ParseError if not linear.
template <class K>
std::vector<RatFun<K>> eval_vector(const ExprNode& n, int dim);

} // namespace ghl
