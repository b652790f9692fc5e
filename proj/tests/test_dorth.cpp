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


#include <doctest.h>
#include <rdh/dhankel.hpp>
#include <rdh/dorth.hpp>
#include <rdh/errors.hpp>
#include <rdh/gfparse.hpp>
#include <rdh/riordan.hpp>

using namespace rdh;

namespace
{

std::vector<Rational> V(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

Series ogf(const char *e, std::size_t n = 24)
{
    return eval_gf(e, n, series_kind::ogf);
}

Polynomial poly(const char *e)
{
    const auto s = ogf(e, 16);
    return Polynomial(std::vector<Rational>(s.coeffs().begin(), s.coeffs().end()));
}

RiordanArray running()
{
    return from_za(array_kind::exponential, ogf("(1+x)^2"), ogf("(1+x)^3"), 24);
}

RiordanArray quartic()
{
    return from_za(array_kind::ordinary, ogf("4*(1+x)^3"), ogf("(1+x)^4"), 24);
}

RiordanArray ordinary()
{
    return from_za(array_kind::ordinary, ogf("1+x+x^2"), ogf("1+x+2*x^2+3*x^3"), 24);
}

RiordanArray quintic()
{
    return from_za(array_kind::exponential, ogf("1+2*x+3*x^2+4*x^3"), ogf("1+x+x^2+x^3+x^4"), 24);
}

std::vector<Rational> head(const std::vector<Rational> &v, std::size_t n)
{
    return {v.begin(), v.begin() + static_cast<long>(n)};
}

} // namespace

TEST_CASE("polynomials from the production matrix")
{
    const auto P = polys_from_production(production_via_series(running()), 5);
    const char *want[] = {"1", "x-1", "x^2-5*x+2", "x^3-12*x^2+27*x-6", "x^4-22*x^3+123*x^2-168*x+24"};
    for (std::size_t n = 0; n < 5; ++n) {
        CHECK(P.polys[n] == poly(want[n]));
    }
    CHECK(polys_from_production(production_via_series(quartic()), 5).polys[4] == poly("x^4-16*x^3+72*x^2-80*x+4"));
    CHECK(polys_from_production(production_via_series(ordinary()), 6).polys[5] == poly("x^5-5*x^4+3*x^3+4*x^2+6*x-4"));
    CHECK(polys_from_production(ProductionMatrix(), 1).polys == std::vector<Polynomial>{Polynomial::constant(1)});
    CHECK_THROWS_AS(polys_from_production(production_via_series(running()), 40), insufficient_data_error);
    CHECK_THROWS_AS(polys_from_production(ProductionMatrix({V({1, 2})}), 2), precondition_error);
}

TEST_CASE("polynomials from determinants agree")
{
    for (const auto &[R, d] : {std::pair{running(), 2}, std::pair{quartic(), 3}, std::pair{ordinary(), 2},
                               std::pair{quintic(), 3}}) {
        const auto F = column_sums(triangle(R), static_cast<std::size_t>(d));
        const auto a = polys_from_determinants(F, 7);
        const auto b = polys_from_production(production_via_series(R), 7);
        CHECK(a == b);
        for (std::size_t n = 0; n < 7; ++n) {
            CHECK(a.polys[n].degree() == static_cast<long>(n));
            CHECK(a.polys[n].leading() == 1);
        }
    }
    CHECK(polys_from_determinants(column_sums(triangle(quartic()), 3), 4).polys[3] == poly("x^3-12*x^2+30*x-4"));
    // d = 1: P_1 = x - a_1/a_0.
    const SequenceFamily F({V({2, 3, 7, 20})});
    CHECK(polys_from_determinants(F, 2).polys[1] == poly("x-3/2"));
    CHECK_THROWS_AS(polys_from_determinants(SequenceFamily({V({1, 1, 1, 1, 1})}), 3), precondition_error);
}

TEST_CASE("coefficient triangle is the inverse moment array")
{
    for (const auto &R : {running(), ordinary(), quartic()}) {
        const auto PF = polys_from_production(production_via_series(R), 8);
        CHECK(coefficient_triangle(PF) == triangle(inverse(R), 8));
    }
    const auto C = coefficient_triangle(polys_from_production(production_via_series(ordinary()), 5));
    CHECK(C.rows()[4] == V({2, 2, 1, -4, 1}));
    CHECK(coefficient_triangle(PolyFamily{{Polynomial::constant(1)}, 0}).rows()[0] == V({1}));
}

TEST_CASE("recurrence bands")
{
    const auto b = bands_from_production(production_via_series(running()), 2);
    CHECK(head(b.alpha, 4) == V({1, 4, 7, 10}));
    CHECK(head(b.bands[0], 4) == V({2, 10, 24, 44}));
    CHECK(head(b.bands[1], 4) == V({2, 12, 36, 80}));
    const auto o = bands_from_production(production_via_series(ordinary()), 2);
    CHECK(head(o.alpha, 4) == V({1, 1, 1, 1}));
    CHECK(head(o.bands[0], 5) == V({1, 2, 2, 2, 2}));
    CHECK(head(o.bands[1], 4) == V({1, 3, 3, 3}));
}

TEST_CASE("recurrence coefficients from determinants")
{
    for (const auto &R : {running(), ordinary()}) {
        const auto F = column_sums(triangle(R), 2);
        const auto got = recurrence_from_determinants(F, 8);
        const auto want = bands_from_production(production_via_series(R), 2);
        CHECK(got.alpha == head(want.alpha, 8));
        CHECK(got.bands[0] == head(want.bands[0], 7));
        CHECK(got.bands[1] == head(want.bands[1], 6));
    }
    CHECK_THROWS_AS(recurrence_from_determinants(column_sums(triangle(quartic()), 3), 4), precondition_error);
}

TEST_CASE("recurrence identity")
{
    const auto P = production_via_series(quintic());
    const auto PF = polys_from_production(P, 10);
    for (std::size_t n = 0; n + 1 < 10; ++n) {
        auto r = PF.polys[n].mul_x() - PF.polys[n + 1];
        for (std::size_t k = 0; k <= n; ++k) {
            r -= PF.polys[k] * P.at(n, k);
        }
        CHECK(r.is_zero());
    }
}

TEST_CASE("orthogonality order")
{
    CHECK(orthogonality_order(production_via_series(running())) == 2u);
    CHECK(orthogonality_order(production_via_series(quartic())) == 3u);
    CHECK(orthogonality_order(production_via_series(ordinary())) == 2u);
    CHECK(orthogonality_order(production_via_series(quintic())) == 3u);
    const auto tri = ProductionMatrix({V({0, 1}), V({1, 0, 1}), V({0, 1, 0, 1}), V({0, 0, 1, 0, 1})});
    CHECK(orthogonality_order(tri) == 1u);
    // (C(x), xC(x)) with C the Catalan series has Z = A = 1/(1-x), so no band shows.
    const auto cat = production_via_series(
        RiordanArray(array_kind::ordinary, ogf("2/(1+sqrt(1-4*x))", 10), ogf("2*x/(1+sqrt(1-4*x))", 10)));
    CHECK_FALSE(orthogonality_order(cat).has_value());
    CHECK_FALSE(orthogonality_order(ProductionMatrix()).has_value());
}
