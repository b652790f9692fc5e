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
#include <rdh/dorth.hpp>
#include <rdh/errors.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace rdh
{

PolyFamily polys_from_production(const ProductionMatrix &P, std::size_t count)
{
    if (count > P.size() + 1) {
        throw insufficient_data_error(std::to_string(count) + " polynomials need a production matrix with "
                                      + std::to_string(count - 1) + " rows, have " + std::to_string(P.size()));
    }
    PolyFamily pf;
    if (count == 0) {
        return pf;
    }
    pf.polys.push_back(Polynomial::constant(1));
    for (std::size_t n = 0; n + 1 < count; ++n) {
        if (P.at(n, n + 1) != Rational(1)) {
            throw precondition_error("production row " + std::to_string(n) + " has superdiagonal "
                                     + P.at(n, n + 1).to_string() + "; only monic families (superdiagonal 1) are supported");
        }
        auto next = pf.polys[n].mul_x();
        for (std::size_t k = 0; k <= n; ++k) {
            const auto p = P.at(n, k);
            if (!p.is_zero()) {
                next -= pf.polys[k] * p;
            }
        }
        pf.polys.push_back(std::move(next));
    }
    return pf;
}

PolyFamily polys_from_determinants(const SequenceFamily &F, std::size_t count)
{
    PolyFamily pf;
    pf.d = F.d();
    if (count == 0) {
        return pf;
    }
    pf.polys.push_back(Polynomial::constant(1));
    for (std::size_t n = 1; n < count; ++n) {
        const auto prev = dhankel(F, n - 1);
        if (prev.is_zero()) {
            throw precondition_error("degenerate family: h_" + std::to_string(n - 1) + " = 0, so P_"
                                     + std::to_string(n) + " is undefined");
        }
        pf.polys.push_back(dhankel_poly(F, n) / prev);
    }
    return pf;
}

TriangleSlice coefficient_triangle(const PolyFamily &PF)
{
    std::vector<std::vector<Rational>> rows;
    rows.reserve(PF.polys.size());
    for (std::size_t n = 0; n < PF.polys.size(); ++n) {
        const auto &p = PF.polys[n];
        if (p.degree() > static_cast<long>(n)) {
            throw precondition_error("P_" + std::to_string(n) + " has degree " + std::to_string(p.degree()));
        }
        std::vector<Rational> row(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            row[k] = p.coeff(k);
        }
        rows.push_back(std::move(row));
    }
    return TriangleSlice(std::move(rows));
}

namespace
{

// h_m and the minors h_{m,k} of h_m(x) for m = 0..top, with the conventions
// used by the recurrence formulas for out-of-range indices.
class hankel_table
{
public:
    hankel_table(const SequenceFamily &F, std::size_t top)
    {
        for (std::size_t m = 0; m <= top; ++m) {
            m_h.push_back(dhankel(F, m));
            std::vector<Rational> row;
            for (std::size_t k = 0; k <= m; ++k) {
                row.push_back(dhankel_minor(F, m, k));
            }
            m_minor.push_back(std::move(row));
        }
    }

    // h_{m,k}; the empty minor h_{0,-1} is 1, other negative indices give 0.
    Rational minor(long m, long k) const
    {
        if (m == 0 && k == -1) {
            return 1;
        }
        if (m < 0 || k < 0) {
            return 0;
        }
        return m_minor.at(static_cast<std::size_t>(m)).at(static_cast<std::size_t>(k));
    }

    // h_{m,k} / h_den, skipping the division when the numerator is an
    // out-of-range zero.
    Rational ratio(long m, long k, long den) const
    {
        const auto num = minor(m, k);
        if (num.is_zero()) {
            return 0;
        }
        const Rational h = den < 0 ? Rational(1) : m_h.at(static_cast<std::size_t>(den));
        if (h.is_zero()) {
            throw precondition_error("recurrence coefficient needs 1/h_" + std::to_string(den) + " but h_"
                                     + std::to_string(den) + " = 0");
        }
        return num / h;
    }

private:
    std::vector<Rational> m_h;
    std::vector<std::vector<Rational>> m_minor;
};

} // namespace

RecurrenceBands recurrence_from_determinants(const SequenceFamily &F, std::size_t count)
{
    if (F.d() != 2) {
        throw precondition_error("determinantal recurrence coefficients are implemented for d = 2 only, got d = "
                                 + std::to_string(F.d()));
    }
    RecurrenceBands rb;
    rb.d = 2;
    rb.bands.resize(2);
    if (count == 0) {
        return rb;
    }
    const hankel_table h(F, count);
    std::vector<Rational> beta, gamma;
    for (long n = 0; n < static_cast<long>(count); ++n) {
        const Rational zero_pow = n == 0 ? 1 : 0;
        const auto a = h.ratio(n + 1, n, n) - h.ratio(n, n - 1, n - 1) + zero_pow;
        const auto b = a * h.ratio(n, n - 1, n - 1) + h.ratio(n, n - 2, n - 1) - h.ratio(n + 1, n - 1, n);
        const auto g = b * h.ratio(n - 1, n - 2, n - 2) - a * h.ratio(n, n - 2, n - 1) - h.ratio(n, n - 3, n - 1)
                       + h.ratio(n + 1, n - 2, n);
        rb.alpha.push_back(a);
        beta.push_back(b);
        gamma.push_back(g);
    }
    // beta_n = p(n, n-1), gamma_n = p(n, n-2).
    rb.bands[0].assign(beta.begin() + 1, beta.end());
    if (count > 2) {
        rb.bands[1].assign(gamma.begin() + 2, gamma.end());
    }
    return rb;
}

RecurrenceBands bands_from_production(const ProductionMatrix &P, std::size_t d)
{
    RecurrenceBands rb;
    rb.d = d;
    rb.bands.resize(d);
    for (std::size_t n = 0; n < P.size(); ++n) {
        rb.alpha.push_back(P.at(n, n));
        for (std::size_t j = 1; j <= d && n + j < P.size(); ++j) {
            rb.bands[j - 1].push_back(P.at(n + j, n));
        }
    }
    return rb;
}

std::optional<std::size_t> orthogonality_order(const ProductionMatrix &P)
{
    std::size_t widest = 0;
    for (std::size_t n = 0; n < P.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            if (!P.at(n, k).is_zero()) {
                widest = std::max(widest, n - k);
                break;
            }
        }
    }
    if (P.size() == 0 || (widest > 0 && widest + 1 >= P.size())) {
        return std::nullopt;
    }
    return widest;
}

} // namespace rdh
