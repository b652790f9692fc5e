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

#include <rdh/dhankel.hpp>
#include <rdh/errors.hpp>

#include <string>
#include <utility>

namespace rdh
{

namespace
{

void require_square(const Matrix &M)
{
    if (M.rows() != M.cols()) {
        throw precondition_error("determinant of a non-square matrix");
    }
}

} // namespace

Rational det_bareiss(const Matrix &M)
{
    require_square(M);
    const auto n = M.rows();
    if (n == 0) {
        return 1;
    }
    std::vector<std::vector<integer>> a(n, std::vector<integer>(n));
    integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        integer l = 1;
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), M(i, j).get_mpq().get_den_mpz_t());
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto &q = M(i, j).get_mpq();
            a[i][j] = q.get_num() * (l / q.get_den());
        }
        scale *= l;
    }
    int sign = 1;
    integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) {
                ++p;
            }
            if (p == n) {
                return 0;
            }
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return Rational(sign * a[n - 1][n - 1], scale);
}

Rational det_gauss(const Matrix &M)
{
    require_square(M);
    const auto n = M.rows();
    auto a = M;
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero()) {
            ++p;
        }
        if (p == n) {
            return 0;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
            }
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) {
                continue;
            }
            const auto factor = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) {
                a(i, j) -= factor * a(k, j);
            }
        }
    }
    return det;
}

Rational det_exact(const Matrix &M)
{
    return det_bareiss(M);
}

std::size_t dhankel_required_length(std::size_t d, std::size_t n)
{
    return n / d + n + 1;
}

namespace
{

void check_length(const SequenceFamily &F, std::size_t n)
{
    const auto d = F.d();
    // Sequence r feeds rows r, r+d, ...; its last row reaches index (n-r)/d + n.
    for (std::size_t r = 0; r < d && r <= n; ++r) {
        const auto need = (n - r) / d + n + 1;
        if (F.sequence(r).size() < need) {
            throw insufficient_data_error("h_" + std::to_string(n) + " of the " + std::to_string(d)
                                          + "-Hankel transform needs sequence " + std::to_string(r)
                                          + " to have at least " + std::to_string(need) + " terms (have "
                                          + std::to_string(F.sequence(r).size()) + ")");
        }
    }
}

} // namespace

Matrix dhankel_matrix(const SequenceFamily &F, std::size_t n)
{
    const auto d = F.d();
    check_length(F, n);
    Matrix M(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const auto s = F.sequence(i % d);
        const auto q = i / d;
        for (std::size_t j = 0; j <= n; ++j) {
            M(i, j) = s[q + j];
        }
    }
    return M;
}

Rational dhankel(const SequenceFamily &F, std::size_t n)
{
    return det_exact(dhankel_matrix(F, n));
}

std::vector<Rational> dhankel_transform(const SequenceFamily &F, std::size_t n)
{
    check_length(F, n);
    std::vector<Rational> h;
    h.reserve(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
        h.push_back(dhankel(F, m));
    }
    return h;
}

namespace
{

// Rows 0..n-1 of M with column k removed.
Matrix last_row_minor(const Matrix &M, std::size_t k)
{
    const auto n = M.rows() - 1;
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0, c = 0; j <= n; ++j) {
            if (j != k) {
                m(i, c++) = M(i, j);
            }
        }
    }
    return m;
}

} // namespace

Rational dhankel_minor(const SequenceFamily &F, std::size_t n, std::size_t k)
{
    if (k > n) {
        throw precondition_error("minor column index exceeds the matrix size");
    }
    return det_exact(last_row_minor(dhankel_matrix(F, n), k));
}

Polynomial dhankel_poly(const SequenceFamily &F, std::size_t n)
{
    // Only rows 0..n-1 enter the cofactors, but row n is validated too so
    // that the length requirement matches dhankel(F, n).
    const auto M = dhankel_matrix(F, n);
    std::vector<Rational> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const auto minor = det_exact(last_row_minor(M, k));
        c[k] = (n + k) % 2 == 0 ? minor : -minor;
    }
    return Polynomial(std::move(c));
}

Rational product_formula(std::span<const Rational> gamma, std::size_t d, std::size_t n)
{
    if (d == 0) {
        throw precondition_error("product formula needs d >= 1");
    }
    Rational p = 1;
    for (std::size_t k = 0; k <= n; ++k) {
        const auto e = (n - k) / d;
        if (e == 0) {
            continue;
        }
        if (k >= gamma.size()) {
            throw insufficient_data_error("product formula for n = " + std::to_string(n) + " needs gamma_"
                                          + std::to_string(k));
        }
        p *= gamma[k].pow(static_cast<long>(e));
    }
    return p;
}

} // namespace rdh
