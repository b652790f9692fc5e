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

#ifndef RDH_RIORDAN_HPP
#define RDH_RIORDAN_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <rdh/matrix.hpp>
#include <rdh/rational.hpp>
#include <rdh/sequence_family.hpp>
#include <rdh/series.hpp>

namespace rdh
{

enum class array_kind { ordinary, exponential };

const char *to_string(array_kind) noexcept;

inline series_kind series_kind_for(array_kind k)
{
    return k == array_kind::ordinary ? series_kind::ogf : series_kind::egf;
}

// The array [g, f] with T(n,k) = [x^n] g f^k (ordinary) or
// (n!/k!) [x^n] g f^k (exponential). Requires g[0] = 1, f[0] = 0, f[1] != 0.
// Both series are retagged to the array's kind; order() is the smaller of
// their orders.
class RiordanArray
{
public:
    RiordanArray(array_kind kind, Series g, Series f);

    array_kind kind() const
    {
        return m_kind;
    }
    const Series &g() const
    {
        return m_g;
    }
    const Series &f() const
    {
        return m_f;
    }
    std::size_t order() const
    {
        return m_g.order();
    }

private:
    array_kind m_kind;
    Series m_g;
    Series m_f;
};

// Leading rows of a lower-triangular array; row n has n + 1 entries.
class TriangleSlice
{
public:
    TriangleSlice() = default;
    explicit TriangleSlice(std::vector<std::vector<Rational>> rows);

    std::size_t size() const
    {
        return m_rows.size();
    }
    std::span<const Rational> row(std::size_t n) const
    {
        return m_rows.at(n);
    }
    const std::vector<std::vector<Rational>> &rows() const
    {
        return m_rows;
    }
    // Zero above the diagonal.
    Rational at(std::size_t n, std::size_t k) const;
    Matrix to_matrix() const;

    friend bool operator==(const TriangleSlice &, const TriangleSlice &) = default;

private:
    std::vector<std::vector<Rational>> m_rows;
};

// Lower Hessenberg production matrix, stored by rows: row n holds columns
// 0..n+1, so the superdiagonal of the last row is kept as well. Z and A are
// present when the matrix was built from its Z/A-sequences.
class ProductionMatrix
{
public:
    ProductionMatrix() = default;
    explicit ProductionMatrix(std::vector<std::vector<Rational>> rows, std::optional<Series> Z = {},
                              std::optional<Series> A = {});

    std::size_t size() const
    {
        return m_rows.size();
    }
    std::span<const Rational> row(std::size_t n) const
    {
        return m_rows.at(n);
    }
    const std::vector<std::vector<Rational>> &rows() const
    {
        return m_rows;
    }
    // Zero above the superdiagonal. n < size().
    Rational at(std::size_t n, std::size_t k) const;
    // Leading size() x size() block.
    Matrix square() const;

    const std::optional<Series> &Z() const
    {
        return m_Z;
    }
    const std::optional<Series> &A() const
    {
        return m_A;
    }

    // Entry equality only; Z/A annotations are ignored.
    friend bool operator==(const ProductionMatrix &a, const ProductionMatrix &b)
    {
        return a.m_rows == b.m_rows;
    }

private:
    std::vector<std::vector<Rational>> m_rows;
    std::optional<Series> m_Z, m_A;
};

Rational entry(const RiordanArray &R, std::size_t n, std::size_t k);
// Rows 0..rows-1; rows defaults to the array order.
TriangleSlice triangle(const RiordanArray &R, std::optional<std::size_t> rows = {});

// [1/g(fbar), fbar] with fbar the compositional inverse of f.
RiordanArray inverse(const RiordanArray &R);

// P = T^-1 Tbar by forward substitution on the triangle rows. A triangle
// with N rows yields N - 1 production rows.
ProductionMatrix production_via_matrix(const TriangleSlice &T);
ProductionMatrix production_via_matrix(const RiordanArray &R);

struct ZASequences {
    Series Z;
    Series A;
};

// Z and A of the production matrix. Their order is R.order() - 1.
ZASequences za_sequences(const RiordanArray &R);

// Production matrix with the given number of rows, entries read off Z and A:
//   ordinary:    p(n,0) = Z_n,                 p(n,k) = A_{n-k+1}
//   exponential: p(n,k) = n!/k! Z_{n-k} + n!/(k-1)! A_{n-k+1}
ProductionMatrix production_from_za(array_kind kind, const Series &Z, const Series &A, std::size_t rows);
// production_from_za(za_sequences(R)) sized like production_via_matrix(R).
ProductionMatrix production_via_series(const RiordanArray &R);

// The "moment" array whose production matrix has the given Z and A.
// Result order is min(order, Z.order(), A.order()). Requires A[0] != 0.
RiordanArray from_za(array_kind kind, const Series &Z, const Series &A, std::size_t order);
// The coefficient array of the associated polynomial family, i.e. the
// inverse of from_za.
RiordanArray coefficient_array_from_za(array_kind kind, const Series &Z, const Series &A, std::size_t order);

// row_0 = (1), row_{n+1} = row_n * P. Needs P.size() >= rows - 1.
TriangleSlice generate_from_production(const ProductionMatrix &P, std::size_t rows);

// S_k[n] = T(n,0) + ... + T(n,k) for k = 0..d-1, over every row of T.
SequenceFamily column_sums(const TriangleSlice &T, std::size_t d);

} // namespace rdh

#endif
