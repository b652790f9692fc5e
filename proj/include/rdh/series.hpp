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

#ifndef RDH_SERIES_HPP
#define RDH_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <rdh/rational.hpp>

namespace rdh
{

// How the coefficients of a series map to sequence terms. The stored
// coefficients are always the plain power series coefficients [x^n]; the
// kind only changes seq_term() (n! scaling for EGF).
enum class series_kind { ogf, egf };

const char *to_string(series_kind) noexcept;

// Truncated formal power series over the rationals. order() is the number
// of stored coefficients (>= 1); everything at or above x^order is unknown.
//
// Binary operations truncate to the smaller order of their operands. All
// free functions below are pure.
class Series
{
public:
    // coeffs must be nonempty.
    Series(series_kind kind, std::vector<Rational> coeffs);

    static Series zero(std::size_t order, series_kind kind = series_kind::ogf);
    static Series constant(const Rational &c, std::size_t order, series_kind kind = series_kind::ogf);
    static Series x(std::size_t order, series_kind kind = series_kind::ogf);
    // Zero-pads (or truncates) a polynomial to the requested order.
    static Series polynomial(std::vector<Rational> coeffs, std::size_t order, series_kind kind = series_kind::ogf);

    series_kind kind() const
    {
        return m_kind;
    }
    std::size_t order() const
    {
        return m_coeffs.size();
    }
    std::span<const Rational> coeffs() const
    {
        return m_coeffs;
    }

    // [x^n]. Throws truncation_error when n >= order().
    const Rational &coeff(std::size_t n) const;
    // coeff(n) for OGF, n! * coeff(n) for EGF.
    Rational seq_term(std::size_t n) const;
    // seq_term for every stored index.
    std::vector<Rational> terms() const;

    Series truncated(std::size_t order) const;
    // Changes the tag only; coefficients are untouched.
    Series retagged(series_kind kind) const;

    Series operator-() const;

    friend bool operator==(const Series &, const Series &) = default;

private:
    series_kind m_kind;
    std::vector<Rational> m_coeffs;
};

Series add(const Series &a, const Series &b);
Series sub(const Series &a, const Series &b);
Series scale(const Series &a, const Rational &c);
Series mul(const Series &a, const Series &b);
// Requires b[0] != 0.
Series div(const Series &a, const Series &b);
// 1/a, requires a[0] != 0.
Series reciprocal(const Series &a);

inline Series operator+(const Series &a, const Series &b)
{
    return add(a, b);
}
inline Series operator-(const Series &a, const Series &b)
{
    return sub(a, b);
}
inline Series operator*(const Series &a, const Series &b)
{
    return mul(a, b);
}
inline Series operator/(const Series &a, const Series &b)
{
    return div(a, b);
}

// x * s; the top coefficient of s falls off so the order is unchanged.
Series mul_x(const Series &s);
// s / x, requires s[0] == 0. Result order is s.order() - 1.
Series div_x(const Series &s);

// outer(inner(x)); requires inner[0] == 0. Result kind is outer's.
Series compose(const Series &outer, const Series &inner);
// Compositional inverse; requires f[0] == 0 and f[1] != 0.
Series reversion(const Series &f);

// Result order is s.order() - 1 (index 0 is consumed).
Series derivative(const Series &s);
// Integral from 0 with zero constant term; keeps s.order(), so the top
// coefficient of s does not contribute.
Series integrate(const Series &s);

// Requires s[0] == 0.
Series exp_series(const Series &s);
// Require s[0] == 1.
Series log_series(const Series &s);
Series sqrt_series(const Series &s);
// Negative exponents require s[0] != 0.
Series pow_int(const Series &s, long exponent);

// Rescales coefficient n by n! (EGF -> OGF) or 1/n! (OGF -> EGF) so that
// seq_term() is preserved, and retags.
Series convert_kind(const Series &s, series_kind to);

// b_n = sum_k C(n,k) a_k.
std::vector<Rational> binomial_transform(std::span<const Rational> a);

} // namespace rdh

#endif
