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
#include <rdh/riordan.hpp>

using namespace rdh;

namespace
{

Series ogf(const char *e, std::size_t n = 12)
{
    return eval_gf(e, n, series_kind::ogf);
}

Series egf(const char *e, std::size_t n = 12)
{
    return eval_gf(e, n, series_kind::egf);
}

RiordanArray running(std::size_t n = 12)
{
    return RiordanArray(array_kind::exponential, egf("1/sqrt(1-2*x)", n), egf("1/sqrt(1-2*x)-1", n));
}

RiordanArray pascal(std::size_t n = 12)
{
    return RiordanArray(array_kind::ordinary, ogf("1/(1-x)", n), ogf("x/(1-x)", n));
}

RiordanArray quartic(std::size_t n = 16)
{
    return from_za(array_kind::ordinary, ogf("4*(1+x)^3", n), ogf("(1+x)^4", n), n);
}

std::vector<Rational> V(std::initializer_list<long> v)
{
    return {v.begin(), v.end()};
}

std::vector<Rational> head(std::span<const Rational> s, std::size_t n)
{
    return {s.begin(), s.begin() + static_cast<long>(n)};
}

} // namespace

TEST_CASE("array validation")
{
    CHECK_THROWS_AS(RiordanArray(array_kind::ordinary, ogf("2+x"), ogf("x")), precondition_error);
    CHECK_THROWS_AS(RiordanArray(array_kind::ordinary, ogf("1"), ogf("1+x")), precondition_error);
    CHECK_THROWS_AS(RiordanArray(array_kind::ordinary, ogf("1"), ogf("x^2")), precondition_error);
    const RiordanArray R(array_kind::exponential, ogf("1", 5), ogf("x", 8));
    CHECK(R.order() == 5);
    CHECK(R.f().order() == 5);
    CHECK(R.g().kind() == series_kind::egf);
}

TEST_CASE("entries")
{
    CHECK(entry(running(), 4, 1) == 279);
    CHECK(entry(quartic(), 3, 1) == 66);
    CHECK(entry(pascal(), 4, 2) == 6);
    CHECK(entry(pascal(), 2, 4) == 0);
    CHECK_THROWS_AS(entry(pascal(5), 5, 0), truncation_error);
}

TEST_CASE("triangles")
{
    const RiordanArray id(array_kind::ordinary, ogf("1", 4), ogf("x", 4));
    CHECK(triangle(id).to_matrix() == Matrix::identity(4));
    const auto T = triangle(pascal(), 7);
    for (std::size_t n = 0; n < 7; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            CHECK(T.at(n, k) == oracle::binom(static_cast<long>(n), static_cast<long>(k)));
        }
    }
    const auto Q = triangle(quartic(), 10);
    for (long n = 0; n < 10; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(Q.at(static_cast<std::size_t>(n), static_cast<std::size_t>(k)) == oracle::binom(4 * n, 3 * n + k));
        }
    }
    CHECK(T.at(2, 5) == 0);
    CHECK_THROWS_AS(triangle(pascal(5), 6), truncation_error);
}

TEST_CASE("inverse")
{
    const auto inv = inverse(running());
    CHECK(inv.g() == egf("1/(1+x)"));
    CHECK(inv.f() == egf("(1-1/(1+x)^2)/2"));
    for (const auto &R : {running(8), pascal(8), quartic(8)}) {
        const auto prod = triangle(R).to_matrix() * triangle(inverse(R)).to_matrix();
        CHECK(prod == Matrix::identity(R.order()));
    }
}

TEST_CASE("production matrices")
{
    const auto P = production_via_matrix(running());
    CHECK(head(P.row(0), 2) == V({1, 1}));
    CHECK(head(P.row(1), 3) == V({2, 4, 1}));
    CHECK(head(P.row(2), 4) == V({2, 10, 7, 1}));
    CHECK(P == production_via_series(running()));
    const auto Q = production_via_series(quartic());
    CHECK(std::vector<Rational>{Q.at(0, 0), Q.at(1, 0), Q.at(2, 0), Q.at(3, 0), Q.at(4, 0)} == V({4, 12, 12, 4, 0}));
    CHECK(Q == production_via_matrix(quartic()));
    const auto Pp = production_via_series(pascal());
    for (std::size_t n = 0; n < Pp.size(); ++n) {
        CHECK(Pp.at(n, 0) == (n == 0 ? 1 : 0));
        for (std::size_t k = 1; k <= n + 1; ++k) {
            CHECK(Pp.at(n, k) == (k + 1 >= n + 1 ? 1 : 0));
        }
    }
    // A triangle with N rows gives N - 1 production rows.
    CHECK(production_via_matrix(triangle(running(), 5)).size() == 4);
    CHECK(P.square().rows() == P.size());
}

TEST_CASE("Z and A sequences")
{
    const auto za = za_sequences(running());
    CHECK(za.Z == ogf("(1+x)^2", za.Z.order()).retagged(za.Z.kind()));
    CHECK(za.A == ogf("(1+x)^3", za.A.order()).retagged(za.A.kind()));
    const auto zp = za_sequences(pascal());
    CHECK(zp.Z.coeffs()[0] == 1);
    CHECK(zp.Z.coeffs()[1] == 0);
    CHECK(zp.A.coeffs()[1] == 1);
    CHECK(zp.A.coeffs()[2] == 0);
    const auto zi = za_sequences(RiordanArray(array_kind::ordinary, ogf("1"), ogf("x")));
    CHECK(zi.Z.coeffs()[0] == 0);
    CHECK(zi.A.coeffs()[0] == 1);
    CHECK(zi.A.coeffs()[1] == 0);
}

TEST_CASE("arrays from Z and A")
{
    const auto R = from_za(array_kind::exponential, ogf("(1+x)^2"), ogf("(1+x)^3"), 12);
    CHECK(R.g() == running().g());
    CHECK(R.f() == running().f());
    const auto O = from_za(array_kind::ordinary, ogf("1+x+x^2"), ogf("1+x+2*x^2+3*x^3"), 12);
    CHECK(triangle(O, 5).rows()
          == std::vector<std::vector<Rational>>{V({1}), V({1, 1}), V({2, 2, 1}), V({5, 6, 3, 1}), V({14, 20, 11, 4, 1})});
    const auto E = from_za(array_kind::exponential, ogf("1+2*x+3*x^2+4*x^3"), ogf("1+x+x^2+x^3+x^4"), 12);
    CHECK(triangle(E, 6).rows()[5] == V({825, 945, 420, 105, 15, 1}));
    CHECK_THROWS_AS(from_za(array_kind::ordinary, ogf("1"), ogf("x"), 5), precondition_error);
}

TEST_CASE("coefficient arrays")
{
    const auto Z = ogf("1+x+x^2"), A = ogf("1+x+2*x^2+3*x^3");
    const auto C = coefficient_array_from_za(array_kind::ordinary, Z, A, 12);
    CHECK(C.g() == ogf("(1+x^2+2*x^3)/(1+x+2*x^2+3*x^3)"));
    CHECK(C.f() == ogf("x/(1+x+2*x^2+3*x^3)"));
    const auto inv = inverse(from_za(array_kind::ordinary, Z, A, 12));
    CHECK(inv.g() == C.g());
    CHECK(inv.f() == C.f());
    const auto Ce = coefficient_array_from_za(array_kind::exponential, ogf("(1+x)^2"), ogf("(1+x)^3"), 12);
    CHECK(Ce.g() == egf("1/(1+x)"));
    CHECK(Ce.f() == egf("(1-(1+x)^-2)/2"));
    const auto C5 = coefficient_array_from_za(array_kind::exponential, ogf("1+2*x+3*x^2+4*x^3"),
                                              ogf("1+x+x^2+x^3+x^4"), 12);
    CHECK(C5.g() == egf("1/(1+x+x^2+x^3+x^4)"));
}

TEST_CASE("generation from a production matrix")
{
    for (const auto &R : {running(9), pascal(9), quartic(9)}) {
        const auto T = triangle(R);
        CHECK(generate_from_production(production_via_matrix(T), T.size()) == T);
    }
    CHECK_THROWS_AS(generate_from_production(production_via_matrix(triangle(pascal(), 4)), 6),
                    insufficient_data_error);
}

TEST_CASE("column sums")
{
    const auto F = column_sums(triangle(running(), 8), 2);
    CHECK(F.d() == 2);
    CHECK(F.sequences()[0] == V({1, 1, 3, 15, 105, 945, 10395, 135135}));
    CHECK(F.sequences()[1] == V({1, 2, 8, 48, 384, 3840, 46080, 645120}));
    const auto G = column_sums(triangle(quartic(), 5), 3);
    CHECK(G.sequences()[2] == V({1, 5, 37, 298, 2500}));
    const auto H = column_sums(triangle(from_za(array_kind::exponential, ogf("1+2*x+3*x^2+4*x^3"),
                                                ogf("1+x+x^2+x^3+x^4"), 12),
                                        6),
                               3);
    CHECK(H.sequences()[1] == V({1, 2, 6, 30, 210, 1770}));
}

TEST_CASE("banded production matrices")
{
    // deg Z <= d and deg A <= d + 1 give exactly d + 2 nonzero diagonals.
    const auto P = production_via_series(quartic(14));
    for (std::size_t n = 0; n < P.size(); ++n) {
        for (std::size_t k = 0; k <= n + 1; ++k) {
            CHECK((P.at(n, k) != 0) == (k + 3 >= n));
        }
    }
}
