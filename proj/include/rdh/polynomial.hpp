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

#ifndef RDH_POLYNOMIAL_HPP
#define RDH_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <rdh/rational.hpp>

namespace rdh
{

// Dense univariate polynomial, coefficient i multiplies x^i. Trailing zeros
// are stripped, so the zero polynomial has no coefficients and degree -1.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational &c);
    static Polynomial monomial(const Rational &c, std::size_t power);

    std::span<const Rational> coeffs() const
    {
        return m_coeffs;
    }
    long degree() const
    {
        return static_cast<long>(m_coeffs.size()) - 1;
    }
    bool is_zero() const
    {
        return m_coeffs.empty();
    }
    // Zero beyond the degree.
    Rational coeff(std::size_t power) const;
    Rational leading() const;

    // "x^2 - 5*x + 2"; the output parses back through the expression language.
    std::string to_string() const;

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial operator-() const;
    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(const Polynomial &a, const Rational &c);
    friend Polynomial operator/(const Polynomial &a, const Rational &c);

    Polynomial mul_x() const;

    friend bool operator==(const Polynomial &, const Polynomial &) = default;

private:
    void normalize();

    std::vector<Rational> m_coeffs;
};

} // namespace rdh

#endif
