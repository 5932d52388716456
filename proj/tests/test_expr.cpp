#include <doctest.h>

#include <random>

#include "weingarten/errors.hpp"
#include "weingarten/expr.hpp"
#include "weingarten/numeric.hpp"

using namespace weingarten;

TEST_CASE("basic parses and evaluation") {
    CHECK(parse_expr("0.5").eval(0, 0) == 0.5);
    CHECK(parse_expr("1 + 0.4*sqrt(t) - 0.1*v").eval(1.0, 1.0) == doctest::Approx(1.3));
    CHECK(parse_expr("2^3^2").eval(0, 0) == 512.0);   // right-associative
    CHECK(parse_expr("-2^2").eval(0, 0) == 4.0);      // unary binds inside the power base
    CHECK(parse_expr("2*-3").eval(0, 0) == -6.0);
    CHECK(parse_expr("1e3 + 2.5e-2").eval(0, 0) == doctest::Approx(1000.025));
    CHECK(parse_expr("tanh(0)").eval(0, 0) == 0.0);
    CHECK(parse_expr("abs(-3)").eval(0, 0) == 3.0);
    CHECK(parse_expr("k2 + v").eval(2.0, 0.25) == 2.25); // k2 aliases the first slot
}

TEST_CASE("parse errors carry byte offsets") {
    try {
        parse_expr("sqrt(t");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 6);
    }
    try {
        parse_expr("1 + bogus");
        FAIL("expected UnknownIdentifier");
    } catch (const UnknownIdentifier& e) {
        CHECK(e.offset == 4);
    }
    CHECK_THROWS_AS(parse_expr("1 + "), ParseError);
    CHECK_THROWS_AS(parse_expr("(1"), ParseError);
    CHECK_THROWS_AS(parse_expr("1)"), ParseError);
    CHECK_THROWS_AS(parse_expr("1..2"), ParseError);
    CHECK_THROWS_AS(parse_expr("1e"), ParseError);
    CHECK_THROWS_AS(parse_expr("w"), UnknownIdentifier);
    CHECK_THROWS_AS(parse_expr("foo(t)"), UnknownIdentifier);
}

TEST_CASE("evaluation domain errors") {
    CHECK_THROWS_AS(parse_expr("log(t)").eval(0.0, 0.0), EvalError);
    CHECK_THROWS_AS(parse_expr("sqrt(t-1)").eval(0.0, 0.0), EvalError);
    CHECK_THROWS_AS(parse_expr("1/t").eval(0.0, 0.0), EvalError);
    CHECK_THROWS_AS(parse_expr("t^0.5").eval(-1.0, 0.0), EvalError);
    CHECK(parse_expr("log(t)").eval(1.0, 0.0) == 0.0);
}

namespace {

// random AST generator for the round-trip property
int random_node(Expr& e, std::mt19937_64& rng, int depth) {
    const auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
    if (depth <= 0 || pick(4) == 0) {
        switch (pick(3)) {
            case 0: return e.add_node({Expr::Op::Num, -5.0 + 10.0 * u64_to_unit(rng()), -1, -1});
            case 1: return e.add_node({Expr::Op::VarT, 0.0, -1, -1});
            default: return e.add_node({Expr::Op::VarV, 0.0, -1, -1});
        }
    }
    switch (pick(8)) {
        case 0: return e.add_node({Expr::Op::Add, 0.0, random_node(e, rng, depth - 1), random_node(e, rng, depth - 1)});
        case 1: return e.add_node({Expr::Op::Sub, 0.0, random_node(e, rng, depth - 1), random_node(e, rng, depth - 1)});
        case 2: return e.add_node({Expr::Op::Mul, 0.0, random_node(e, rng, depth - 1), random_node(e, rng, depth - 1)});
        case 3: return e.add_node({Expr::Op::Div, 0.0, random_node(e, rng, depth - 1), random_node(e, rng, depth - 1)});
        case 4: return e.add_node({Expr::Op::Neg, 0.0, random_node(e, rng, depth - 1), -1});
        case 5: return e.add_node({Expr::Op::Sqrt, 0.0, random_node(e, rng, depth - 1), -1});
        case 6: return e.add_node({Expr::Op::Tanh, 0.0, random_node(e, rng, depth - 1), -1});
        default: return e.add_node({Expr::Op::Pow, 0.0, random_node(e, rng, depth - 1), random_node(e, rng, depth - 1)});
    }
}

} // namespace

TEST_CASE("parse-print-parse round-trips to an identical tree") {
    // the property is over parsed trees: printing and reparsing a parsed
    // expression reproduces it node for node
    std::mt19937_64 rng(20250808u);
    for (int i = 0; i < 300; ++i) {
        Expr raw;
        raw.set_root(random_node(raw, rng, 5));
        const Expr t1 = parse_expr(raw.to_string());
        const Expr t2 = parse_expr(t1.to_string());
        CHECK(t2 == t1);
    }
    for (const char* src : {"1+2*3", "sqrt(t)*v - tanh(v/2)", "-(t^2)^0.5", "1/(1+t)"}) {
        const Expr a = parse_expr(src);
        CHECK(parse_expr(a.to_string()) == a);
    }
}

TEST_CASE("evaluation is pure") {
    const Expr e = parse_expr("sin(t)+cos(v)*exp(-t)");
    const double a = e.eval(0.37, 0.82);
    for (int i = 0; i < 10; ++i) CHECK(e.eval(0.37, 0.82) == a);
}
