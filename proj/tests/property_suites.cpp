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


#include "property_suites.hpp"
#include "oracles.hpp"

#include <rdh/cfrac.hpp>
#include <rdh/dhankel.hpp>
#include <rdh/errors.hpp>
#include <rdh/riordan.hpp>
#include <rdh/series.hpp>

#include <functional>

namespace props
{

namespace
{

using namespace rdh;
using oracle::Gen;

// Runs body(gen) `cases` times; body returns an empty string on success.
SuiteResult run(const char *name, std::uint64_t seed, std::size_t cases,
                const std::function<std::string(Gen &, std::size_t)> &body)
{
    SuiteResult r{name, 0, 0, {}};
    Gen gen(seed);
    for (std::size_t i = 0; i < cases; ++i) {
        std::string err;
        try {
            err = body(gen, i);
        } catch (const std::exception &e) {
            err = std::string("exception: ") + e.what();
        }
        ++r.cases;
        if (!err.empty()) {
            if (r.failures++ == 0) {
                r.first_failure = "case " + std::to_string(i) + ": " + err;
            }
        }
    }
    return r;
}

Series random_series(Gen &g, std::size_t order, Rational c0, std::size_t degree, series_kind kind)
{
    std::vector<Rational> c(order);
    c[0] = c0;
    for (std::size_t i = 1; i < order && i <= degree; ++i) {
        c[i] = g.rational(-3, 3);
    }
    return Series(kind, std::move(c));
}

// f with f0 = 0 and a nonzero linear term.
Series random_f(Gen &g, std::size_t order, series_kind kind, bool monic = false)
{
    auto s = random_series(g, order, 0, order, kind);
    std::vector<Rational> c(s.coeffs().begin(), s.coeffs().end());
    c[1] = monic ? Rational(1) : g.nonzero(-3, 3);
    return Series(kind, std::move(c));
}

RiordanArray random_array(Gen &g, std::size_t order, bool monic = false)
{
    const auto kind = g.integer(0, 1) ? array_kind::exponential : array_kind::ordinary;
    const auto sk = series_kind_for(kind);
    return RiordanArray(kind, random_series(g, order, 1, order, sk), random_f(g, order, sk, monic));
}

// Random polynomial (Z, A) pair with deg Z <= d, deg A <= d + 1, A0 = 1.
std::pair<Series, Series> random_za(Gen &g, std::size_t order, std::size_t d)
{
    return {random_series(g, order, g.rational(-3, 3), d, series_kind::ogf),
            random_series(g, order, 1, d + 1, series_kind::ogf)};
}

} // namespace

SuiteResult reversion_round_trip(std::uint64_t seed, std::size_t cases)
{
    return run("series reversion round-trip", seed, cases, [](Gen &g, std::size_t) -> std::string {
        const auto f = random_f(g, static_cast<std::size_t>(g.integer(2, 9)), series_kind::ogf);
        const auto fbar = reversion(f);
        if (reversion(fbar) != f) {
            return "Rev(Rev(f)) != f";
        }
        if (compose(f, fbar) != Series::x(f.order())) {
            return "f(Rev f) != x";
        }
        return {};
    });
}

SuiteResult inverse_involution(std::uint64_t seed, std::size_t cases)
{
    return run("inverse(inverse(R)) = R", seed, cases, [](Gen &g, std::size_t) -> std::string {
        const auto R = random_array(g, static_cast<std::size_t>(g.integer(2, 8)));
        const auto RR = inverse(inverse(R));
        if (RR.g() != R.g() || RR.f() != R.f()) {
            return "pair differs";
        }
        const auto N = R.order();
        const auto prod = triangle(R, N).to_matrix() * triangle(inverse(R), N).to_matrix();
        if (prod != Matrix::identity(N)) {
            return "T * T^-1 != I";
        }
        return {};
    });
}

SuiteResult production_routes_agree(std::uint64_t seed, std::size_t cases)
{
    return run("production_via_matrix = production_via_series", seed, cases,
               [](Gen &g, std::size_t i) -> std::string {
                   const std::size_t order = static_cast<std::size_t>(g.integer(3, 9));
                   RiordanArray R = random_array(g, order);
                   if (i % 2) {
                       const auto [Z, A] = random_za(g, order, static_cast<std::size_t>(g.integer(1, 3)));
                       R = from_za(g.integer(0, 1) ? array_kind::exponential : array_kind::ordinary, Z, A, order);
                   }
                   if (production_via_matrix(R) != production_via_series(R)) {
                       return "routes differ";
                   }
                   return {};
               });
}

SuiteResult generate_reproduces_triangle(std::uint64_t seed, std::size_t cases)
{
    return run("generate_from_production(production(T)) = T", seed, cases, [](Gen &g, std::size_t) -> std::string {
        const auto R = random_array(g, static_cast<std::size_t>(g.integer(2, 9)));
        const auto T = triangle(R);
        if (generate_from_production(production_via_matrix(T), T.size()) != T) {
            return "regenerated triangle differs";
        }
        return {};
    });
}

SuiteResult za_round_trip(std::uint64_t seed, std::size_t cases)
{
    return run("za_sequences(from_za(Z, A)) = (Z, A)", seed, cases, [](Gen &g, std::size_t) -> std::string {
        const std::size_t order = static_cast<std::size_t>(g.integer(3, 9));
        const auto [Z, A] = random_za(g, order, static_cast<std::size_t>(g.integer(1, 3)));
        const auto kind = g.integer(0, 1) ? array_kind::exponential : array_kind::ordinary;
        const auto za = za_sequences(from_za(kind, Z, A, order));
        const auto n = za.Z.order();
        if (n + 1 < order || za.Z != Z.truncated(n).retagged(za.Z.kind())
            || za.A != A.truncated(za.A.order()).retagged(za.A.kind())) {
            return "Z or A differ";
        }
        return {};
    });
}

SuiteResult classical_hankel(std::uint64_t seed, std::size_t cases)
{
    return run("dhankel(d=1) = classical Hankel", seed, cases, [](Gen &g, std::size_t) -> std::string {
        std::vector<Rational> a(8);
        for (auto &v : a) {
            v = g.rational(-5, 5);
        }
        const SequenceFamily F({a});
        for (std::size_t n = 0; n <= 3; ++n) {
            if (dhankel(F, n) != oracle::classical_hankel(a, n)) {
                return "h_" + std::to_string(n) + " differs";
            }
        }
        return {};
    });
}

SuiteResult bareiss_vs_gauss(std::uint64_t seed, std::size_t cases)
{
    return run("Bareiss = Gaussian elimination", seed, cases, [](Gen &g, std::size_t i) -> std::string {
        const auto n = static_cast<std::size_t>(g.integer(1, 6));
        Matrix M(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                M(r, c) = g.rational(-4, 4);
            }
        }
        if (i % 5 == 0 && n > 1) {
            // Force a singular matrix now and then.
            for (std::size_t c = 0; c < n; ++c) {
                M(n - 1, c) = M(0, c) * 2;
            }
        }
        const auto b = det_bareiss(M);
        if (b != det_gauss(M)) {
            return "Bareiss " + b.to_string() + " vs Gauss " + det_gauss(M).to_string();
        }
        if (n <= 5 && b != oracle::det_leibniz(oracle::to_rows(M))) {
            return "Bareiss disagrees with Leibniz";
        }
        return {};
    });
}

SuiteResult cfrac_vs_generation(std::uint64_t seed, std::size_t cases)
{
    return run("cfrac expand = first column of generated triangle", seed, cases,
               [](Gen &g, std::size_t) -> std::string {
                   const auto d = static_cast<std::size_t>(g.integer(1, 3));
                   const auto N = static_cast<std::size_t>(g.integer(1, 10));
                   // Band d has rows - d levels and expand needs N + d of them.
                   const auto rows = N + 2 * d;
                   std::vector<std::vector<Rational>> p(rows);
                   for (std::size_t n = 0; n < rows; ++n) {
                       p[n].resize(n + 2);
                       p[n][n + 1] = 1;
                       for (std::size_t k = n >= d ? n - d : 0; k <= n; ++k) {
                           p[n][k] = g.integer(0, 5);
                       }
                   }
                   const ProductionMatrix P(p);
                   const auto s = expand(from_production(P, d), N);
                   const auto T = generate_from_production(P, N);
                   for (std::size_t n = 0; n < N; ++n) {
                       if (s.coeff(n) != T.at(n, 0)) {
                           return "coefficient " + std::to_string(n) + ": " + s.coeff(n).to_string() + " vs "
                                  + T.at(n, 0).to_string();
                       }
                   }
                   return {};
               });
}

std::vector<SuiteResult> run_all(std::uint64_t seed)
{
    return {reversion_round_trip(seed),     inverse_involution(seed + 1),  production_routes_agree(seed + 2),
            generate_reproduces_triangle(seed + 3), za_round_trip(seed + 4), classical_hankel(seed + 5),
            bareiss_vs_gauss(seed + 6),     cfrac_vs_generation(seed + 7)};
}

} // namespace props
