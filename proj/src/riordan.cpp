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

#include <rdh/errors.hpp>
#include <rdh/riordan.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace rdh
{

const char *to_string(array_kind k) noexcept
{
    return k == array_kind::ordinary ? "ordinary" : "exponential";
}

namespace
{

Series common(const Series &s, std::size_t order, array_kind kind)
{
    return s.truncated(order).retagged(series_kind_for(kind));
}

} // namespace

RiordanArray::RiordanArray(array_kind kind, Series g, Series f)
    : m_kind(kind), m_g(common(g, std::min(g.order(), f.order()), kind)),
      m_f(common(f, std::min(g.order(), f.order()), kind))
{
    if (m_g.coeffs()[0] != Rational(1)) {
        throw precondition_error("Riordan array needs g(0) = 1, got " + m_g.coeffs()[0].to_string());
    }
    if (m_f.order() < 2) {
        throw truncation_error("Riordan array needs at least two coefficients of f");
    }
    if (!m_f.coeffs()[0].is_zero()) {
        throw precondition_error("Riordan array needs f(0) = 0");
    }
    if (m_f.coeffs()[1].is_zero()) {
        throw precondition_error("Riordan array needs f'(0) != 0");
    }
}

TriangleSlice::TriangleSlice(std::vector<std::vector<Rational>> rows) : m_rows(std::move(rows))
{
    for (std::size_t n = 0; n < m_rows.size(); ++n) {
        if (m_rows[n].size() != n + 1) {
            throw input_error("triangle row " + std::to_string(n) + " must have " + std::to_string(n + 1)
                              + " entries");
        }
    }
}

Rational TriangleSlice::at(std::size_t n, std::size_t k) const
{
    return k <= n ? m_rows.at(n)[k] : Rational{};
}

Matrix TriangleSlice::to_matrix() const
{
    Matrix m(size(), size());
    for (std::size_t n = 0; n < size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            m(n, k) = m_rows[n][k];
        }
    }
    return m;
}

ProductionMatrix::ProductionMatrix(std::vector<std::vector<Rational>> rows, std::optional<Series> Z,
                                   std::optional<Series> A)
    : m_rows(std::move(rows)), m_Z(std::move(Z)), m_A(std::move(A))
{
    for (std::size_t n = 0; n < m_rows.size(); ++n) {
        if (m_rows[n].size() != n + 2) {
            throw input_error("production row " + std::to_string(n) + " must have " + std::to_string(n + 2)
                              + " entries");
        }
    }
}

Rational ProductionMatrix::at(std::size_t n, std::size_t k) const
{
    return k <= n + 1 ? m_rows.at(n)[k] : Rational{};
}

Matrix ProductionMatrix::square() const
{
    Matrix m(size(), size());
    for (std::size_t n = 0; n < size(); ++n) {
        for (std::size_t k = 0; k < size() && k <= n + 1; ++k) {
            m(n, k) = m_rows[n][k];
        }
    }
    return m;
}

Rational entry(const RiordanArray &R, std::size_t n, std::size_t k)
{
    if (n >= R.order()) {
        throw truncation_error("entry (" + std::to_string(n) + "," + std::to_string(k)
                               + ") is outside an array of order " + std::to_string(R.order()));
    }
    if (k > n) {
        return {};
    }
    const auto col = mul(R.g(), pow_int(R.f(), static_cast<long>(k)));
    Rational v = col.coeff(n);
    if (R.kind() == array_kind::exponential) {
        v *= Rational(factorial(n), factorial(k));
    }
    return v;
}

TriangleSlice triangle(const RiordanArray &R, std::optional<std::size_t> rows)
{
    const auto N = rows.value_or(R.order());
    if (N > R.order()) {
        throw truncation_error("triangle of " + std::to_string(N) + " rows needs series order " + std::to_string(N)
                               + ", have " + std::to_string(R.order()));
    }
    std::vector<std::vector<Rational>> t(N);
    for (std::size_t n = 0; n < N; ++n) {
        t[n].resize(n + 1);
    }
    // Column k is g f^k; powers of f are accumulated once.
    auto col = R.g().truncated(N);
    const auto f = R.f().truncated(N);
    for (std::size_t k = 0; k < N; ++k) {
        for (std::size_t n = k; n < N; ++n) {
            t[n][k] = col.coeffs()[n];
            if (R.kind() == array_kind::exponential) {
                t[n][k] *= Rational(factorial(n), factorial(k));
            }
        }
        if (k + 1 < N) {
            col = mul(col, f);
        }
    }
    return TriangleSlice(std::move(t));
}

RiordanArray inverse(const RiordanArray &R)
{
    const auto fbar = reversion(R.f());
    return RiordanArray(R.kind(), reciprocal(compose(R.g(), fbar)), fbar);
}

ProductionMatrix production_via_matrix(const TriangleSlice &T)
{
    if (T.size() < 2) {
        throw insufficient_data_error("a production matrix needs a triangle of at least 2 rows");
    }
    const auto m = T.size() - 1;
    std::vector<std::vector<Rational>> P(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto &diag = T.row(i)[i];
        if (diag.is_zero()) {
            throw precondition_error("singular triangle: zero diagonal entry in row " + std::to_string(i));
        }
        P[i].resize(i + 2);
        for (std::size_t j = 0; j <= i + 1; ++j) {
            // Row i of T P = Tbar; P(r, j) vanishes for r < j - 1.
            Rational acc = T.row(i + 1)[j];
            for (std::size_t r = (j == 0 ? 0 : j - 1); r < i; ++r) {
                acc -= T.row(i)[r] * P[r][j];
            }
            P[i][j] = acc / diag;
        }
    }
    return ProductionMatrix(std::move(P));
}

ProductionMatrix production_via_matrix(const RiordanArray &R)
{
    return production_via_matrix(triangle(R));
}

ZASequences za_sequences(const RiordanArray &R)
{
    const auto fbar = reversion(R.f());
    const auto &g = R.g();
    if (R.kind() == array_kind::exponential) {
        // A = 1/fbar', Z = g'(fbar)/g(fbar).
        auto A = reciprocal(derivative(fbar));
        auto Z = compose(derivative(g), fbar) / compose(g, fbar);
        return {std::move(Z), std::move(A)};
    }
    // A = x/fbar, Z = (1 - 1/g(fbar))/fbar.
    const auto fbar_over_x = div_x(fbar);
    auto A = reciprocal(fbar_over_x);
    const auto one = Series::constant(1, g.order(), g.kind());
    auto Z = div_x(one - reciprocal(compose(g, fbar))) / fbar_over_x;
    return {std::move(Z), std::move(A)};
}

ProductionMatrix production_from_za(array_kind kind, const Series &Z, const Series &A, std::size_t rows)
{
    std::vector<std::vector<Rational>> P(rows);
    for (std::size_t n = 0; n < rows; ++n) {
        P[n].resize(n + 2);
        for (std::size_t k = 0; k <= n + 1; ++k) {
            Rational v;
            if (kind == array_kind::ordinary) {
                v = k == 0 ? Z.coeff(n) : A.coeff(n + 1 - k);
            } else {
                if (k <= n) {
                    v += Rational(factorial(n), factorial(k)) * Z.coeff(n - k);
                }
                if (k >= 1) {
                    v += Rational(factorial(n), factorial(k - 1)) * A.coeff(n + 1 - k);
                }
            }
            P[n][k] = std::move(v);
        }
    }
    return ProductionMatrix(std::move(P), Z, A);
}

ProductionMatrix production_via_series(const RiordanArray &R)
{
    if (R.order() < 2) {
        throw insufficient_data_error("a production matrix needs an array of order at least 2");
    }
    const auto za = za_sequences(R);
    return production_from_za(R.kind(), za.Z, za.A, R.order() - 1);
}

namespace
{

void check_za(const Series &A)
{
    if (A.coeffs()[0].is_zero()) {
        throw precondition_error("A-sequence must have a nonzero constant term");
    }
}

} // namespace

RiordanArray from_za(array_kind kind, const Series &Z, const Series &A, std::size_t order)
{
    check_za(A);
    const auto sk = series_kind_for(kind);
    const auto N = std::min({order, Z.order(), A.order()});
    const auto z = Z.truncated(N).retagged(sk);
    const auto a = A.truncated(N).retagged(sk);
    const auto one = Series::constant(1, N, sk);
    if (kind == array_kind::ordinary) {
        // (1/(1 - x Z(f)), f) with f = Rev(x/A).
        const auto f = reversion(mul_x(reciprocal(a)));
        return RiordanArray(kind, reciprocal(one - mul_x(compose(z, f))), f);
    }
    // [exp(int_0^f Z/A), f] with f = Rev(int_0^x 1/A).
    const auto f = reversion(integrate(reciprocal(a)));
    return RiordanArray(kind, exp_series(compose(integrate(z / a), f)), f);
}

RiordanArray coefficient_array_from_za(array_kind kind, const Series &Z, const Series &A, std::size_t order)
{
    check_za(A);
    const auto sk = series_kind_for(kind);
    const auto N = std::min({order, Z.order(), A.order()});
    const auto z = Z.truncated(N).retagged(sk);
    const auto a = A.truncated(N).retagged(sk);
    if (kind == array_kind::ordinary) {
        // (1 - xZ/A, x/A)
        return RiordanArray(kind, Series::constant(1, N, sk) - mul_x(z / a), mul_x(reciprocal(a)));
    }
    // [exp(-int Z/A), int 1/A]
    return RiordanArray(kind, exp_series(-integrate(z / a)), integrate(reciprocal(a)));
}

TriangleSlice generate_from_production(const ProductionMatrix &P, std::size_t rows)
{
    if (rows == 0) {
        return {};
    }
    if (P.size() + 1 < rows) {
        throw insufficient_data_error("generating " + std::to_string(rows) + " rows needs a production matrix with "
                                      + std::to_string(rows - 1) + " rows, have " + std::to_string(P.size()));
    }
    std::vector<std::vector<Rational>> t;
    t.reserve(rows);
    t.push_back({Rational(1)});
    for (std::size_t n = 0; n + 1 < rows; ++n) {
        const auto &prev = t.back();
        std::vector<Rational> next(n + 2);
        for (std::size_t m = 0; m <= n; ++m) {
            if (prev[m].is_zero()) {
                continue;
            }
            const auto prow = P.row(m);
            for (std::size_t j = 0; j < prow.size(); ++j) {
                next[j] += prev[m] * prow[j];
            }
        }
        t.push_back(std::move(next));
    }
    return TriangleSlice(std::move(t));
}

SequenceFamily column_sums(const TriangleSlice &T, std::size_t d)
{
    if (d == 0 || d > T.size()) {
        throw insufficient_data_error("column sums need 1 <= d <= " + std::to_string(T.size()) + ", got d = "
                                      + std::to_string(d));
    }
    std::vector<std::vector<Rational>> seqs(d, std::vector<Rational>(T.size()));
    for (std::size_t n = 0; n < T.size(); ++n) {
        Rational acc;
        for (std::size_t k = 0; k < d; ++k) {
            acc += T.at(n, k);
            seqs[k][n] = acc;
        }
    }
    return SequenceFamily(std::move(seqs));
}

} // namespace rdh
