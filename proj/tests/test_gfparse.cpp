// Copyright 2026 The rdh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "oracles.hpp"

#include <doctest.h>
#include <rdh/errors.hpp>
#include <rdh/gfparse.hpp>

#include <optional>

using namespace rdh;

namespace
{

parse_error parse_failure(const char *text)
{
    try {
        parse_gf(text);
    } catch (const parse_error &e) {
        return e;
    }
    FAIL("expected a parse error for " << text);
    throw;
}

std::vector<Rational> terms(const char *e, std::size_t n, series_kind k)
{
    return eval_gf(e, n, k).terms();
}

std::vector<Rational> V(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

GfExpr random_expr(oracle::Gen &g, int depth)
{
    if (depth == 0 || g.integer(0, 3) == 0) {
        return g.integer(0, 1) ? GfExpr::var() : GfExpr::number(g.rational(-3, 3, 4));
    }
    switch (g.integer(0, 8)) {
        case 0:
            return GfExpr::binary(gf_op::add, random_expr(g, depth - 1), random_expr(g, depth - 1));
        case 1:
            return GfExpr::binary(gf_op::sub, random_expr(g, depth - 1), random_expr(g, depth - 1));
        case 2:
            return GfExpr::binary(gf_op::mul, random_expr(g, depth - 1), random_expr(g, depth - 1));
        case 3:
            return GfExpr::binary(gf_op::div, random_expr(g, depth - 1), random_expr(g, depth - 1));
        case 4:
            return GfExpr::unary(gf_op::neg, random_expr(g, depth - 1));
        case 5:
            return GfExpr::power(random_expr(g, depth - 1), g.integer(-2, 3));
        case 6:
            return GfExpr::unary(gf_op::sqrt, random_expr(g, depth - 1));
        case 7:
            return GfExpr::unary(gf_op::exp, random_expr(g, depth - 1));
        default:
            return GfExpr::unary(gf_op::log, random_expr(g, depth - 1));
    }
}

} // namespace

TEST_CASE("parse trees")
{
    CHECK(dump_gf(parse_gf("1/sqrt(1-2*x)")) == "div(1,sqrt(sub(1,mul(2,x))))");
    CHECK(dump_gf(parse_gf("(1+x)^3")) == "pow(add(1,x),3)");
    CHECK(dump_gf(parse_gf("-x^2")) == "neg(pow(x,2))");
    CHECK(dump_gf(parse_gf("x/2/3")) == "div(div(x,2),3)");
    CHECK(dump_gf(parse_gf("2/3*x")) == "mul(2/3,x)");
    CHECK(dump_gf(parse_gf("(1+x)^-2")) == "pow(add(1,x),-2)");
    CHECK(dump_gf(parse_gf(" 1 - x ")) == "sub(1,x)");
    CHECK(same_tree(parse_gf("1+x"), parse_gf("(1+x)")));
    CHECK_FALSE(same_tree(parse_gf("1+x"), parse_gf("x+1")));
}

TEST_CASE("parse errors carry offsets")
{
    auto e = parse_failure("1/(x");
    CHECK(e.kind() == parse_error_kind::unbalanced_paren);
    CHECK(e.offset() == 4);
    CHECK(parse_failure("1+y").kind() == parse_error_kind::unknown_identifier);
    CHECK(parse_failure("1+y").offset() == 2);
    CHECK(parse_failure("1.5*x").kind() == parse_error_kind::malformed_number);
    CHECK(parse_failure("2x").kind() == parse_error_kind::trailing_input);
    CHECK(parse_failure("1+)").kind() == parse_error_kind::unbalanced_paren);
    CHECK(parse_failure("1+*x").kind() == parse_error_kind::unexpected_token);
    CHECK(parse_failure("1+*x").offset() == 2);
    CHECK(parse_failure("x)").kind() == parse_error_kind::unbalanced_paren);
    CHECK(parse_failure("x^y").kind() == parse_error_kind::malformed_number);
    CHECK(parse_failure("").kind() == parse_error_kind::unexpected_token);
    CHECK(parse_failure("sqrt x").kind() == parse_error_kind::unexpected_token);
}

TEST_CASE("evaluation")
{
    CHECK(terms("1/sqrt(1-2*x)", 6, series_kind::egf) == V({1, 1, 3, 15, 105, 945}));
    CHECK(terms("x/(1-x)^2", 5, series_kind::ogf) == V({0, 1, 2, 3, 4}));
    CHECK(terms("1+x+2*x^2+3*x^3", 4, series_kind::ogf) == V({1, 1, 2, 3}));
    CHECK(terms("exp(x)", 5, series_kind::egf) == V({1, 1, 1, 1, 1}));
    CHECK(terms("x/2/3", 2, series_kind::ogf)[1] == Rational(1, 6));
    CHECK(eval_gf("1", 3, series_kind::egf).kind() == series_kind::egf);
}

TEST_CASE("evaluation failures name the subexpression")
{
    try {
        eval_gf("1 + log(2+x)", 5, series_kind::ogf);
        FAIL("expected eval_error");
    } catch (const eval_error &e) {
        CHECK(e.subexpression() == "log(2+x)");
        CHECK(e.offset() == 4);
    }
    CHECK_THROWS_AS(eval_gf("1/x", 5, series_kind::ogf), precondition_error);
    CHECK_THROWS_AS(eval_gf("sqrt(x)", 5, series_kind::ogf), precondition_error);
    CHECK_THROWS_AS(eval_gf("x^-1", 5, series_kind::ogf), precondition_error);
}

TEST_CASE("print round-trip")
{
    CHECK(print_gf(parse_gf("1/sqrt(1-2*x)")) == "1/sqrt(1-2*x)");
    oracle::Gen g(7);
    int evaluated = 0;
    for (int i = 0; i < 300; ++i) {
        const auto e = random_expr(g, 4);
        const auto text = print_gf(e);
        CAPTURE(text);
        const auto back = parse_gf(text);
        // A second round-trip must evaluate the same as well.
        const auto again = parse_gf(print_gf(back));
        std::optional<Series> a, b;
        try {
            a = eval_gf(e, 6, series_kind::ogf);
        } catch (const precondition_error &) {
        }
        try {
            b = eval_gf(back, 6, series_kind::ogf);
        } catch (const precondition_error &) {
        }
        CHECK(a.has_value() == b.has_value());
        if (a && b) {
            CHECK(*a == *b);
            CHECK(eval_gf(again, 6, series_kind::ogf) == *a);
            ++evaluated;
        }
    }
    CHECK(evaluated >= 100);
}
