#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ghl/expr.hpp"
#include "support.hpp"

using namespace ghl;
using namespace testsupport;

TEST_CASE("tree shape") {
    auto n = parse_expression("alpha*(t-1)/2");
    // left-associative: (alpha * (t-1)) / 2
    REQUIRE(n.kind == ExprNode::Div);
    REQUIRE(n.kids[0].kind == ExprNode::Mul);
    CHECK(n.kids[0].kids[0].kind == ExprNode::Parameter);
    CHECK(n.kids[0].kids[0].text == "alpha");
    CHECK(n.kids[0].kids[1].kind == ExprNode::Sub);
    CHECK(n.kids[1].kind == ExprNode::Integer);
    CHECK(are_equal(eval_scalar<Rational>(n), var("alpha") * (var("t") - q(1)) / q(2)));
}

TEST_CASE("kodaira closed form evaluates to 8") {
    auto f = parse_scalar<Rational>("-(t-1)*(a^2*r^2+b^2*r^2+v^2)^3/(r^4*v^4)");
    CHECK(f.evaluate({{"a", 1}, {"b", 0}, {"r", 1}, {"v", 1}, {"t", 0}}) == Rational(8));
}

TEST_CASE("grammar rejections") {
    CHECK_THROWS_AS(parse_expression("alpha^-1"), ParseError);
    CHECK_THROWS_AS(parse_expression("alpha^"), ParseError);
    CHECK_THROWS_AS(parse_expression("(a+b"), ParseError);
    CHECK_THROWS_AS(parse_expression("a b"), ParseError);
    CHECK_THROWS_AS(parse_expression(""), ParseError);
    CHECK_THROWS_AS(parse_expression("2^1.5"), ParseError);
    try {
        parse_expression("a + * b");
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(e.offset == 4);
    }
    std::set<std::string> decl{"alpha"};
    try {
        parse_scalar<Rational>("alpha + beta", &decl);
        FAIL("expected error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("beta") != std::string::npos);
    }
}

TEST_CASE("whitespace and unary minus") {
    CHECK(are_equal(parse_scalar<Rational>("  - x ^ 2 "), -(var("x") * var("x"))));
    CHECK(are_equal(parse_scalar<Rational>("--x"), var("x")));
    CHECK(are_equal(parse_scalar<Rational>("a-b-c"), var("a") - var("b") - var("c")));
    CHECK(are_equal(parse_scalar<Rational>("a/b/c"), var("a") / (var("b") * var("c"))));
    CHECK(are_equal(parse_scalar<Rational>("0.25*x"), var("x") / q(4)));
}

TEST_CASE("basis vectors only where allowed") {
    ParseOptions o;
    o.allow_basis = true;
    auto n = parse_expression("alpha*e4 - e5/2", o);
    auto v = eval_vector<Rational>(n, 6);
    CHECK(are_equal(v[4], var("alpha")));
    CHECK(are_equal(v[5], q(-1, 2)));
    CHECK(v[0].is_zero());
    CHECK_THROWS(eval_scalar<Rational>(n));
    CHECK_THROWS(eval_vector<Rational>(parse_expression("e1*e2", o), 4));
    CHECK_THROWS(eval_vector<Rational>(parse_expression("e7", o), 4));
    std::set<std::string> decl{"e1"};
    CHECK_THROWS(parse_scalar<Rational>("e1", &decl));
}

TEST_CASE("print then parse is the identity on 100 random rational functions") {
    std::mt19937 rng(4242);
    std::vector<std::string> vars{"alpha", "beta", "t"};
    for (int i = 0; i < 100; ++i) {
        Exact f = random_ratfun(rng, vars);
        Exact g = parse_scalar<Rational>(f.str());
        CHECK(are_equal(f, g));
        CHECK(g.str() == f.str());
    }
}
