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

#include <rdh/polynomial.hpp>

#include <algorithm>
#include <utility>

namespace rdh
{

Polynomial::Polynomial(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs))
{
    normalize();
}

Polynomial Polynomial::constant(const Rational &c)
{
    return Polynomial({c});
}

Polynomial Polynomial::monomial(const Rational &c, std::size_t power)
{
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return Polynomial(std::move(v));
}

void Polynomial::normalize()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

Rational Polynomial::coeff(std::size_t power) const
{
    return power < m_coeffs.size() ? m_coeffs[power] : Rational{};
}

Rational Polynomial::leading() const
{
    return m_coeffs.empty() ? Rational{} : m_coeffs.back();
}

std::string Polynomial::to_string() const
{
    if (m_coeffs.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = m_coeffs.size(); i-- > 0;) {
        const auto &c = m_coeffs[i];
        if (c.is_zero()) {
            continue;
        }
        const bool first = out.empty();
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            out += c.sign() < 0 ? "-" : "";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        const bool unit = mag == Rational(1);
        if (i == 0) {
            out += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
            continue;
        }
        if (!unit) {
            out += (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")") + "*";
        }
        out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t i = 0; i < o.m_coeffs.size(); ++i) {
        m_coeffs[i] += o.m_coeffs[i];
    }
    normalize();
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    return *this += -o;
}

Polynomial Polynomial::operator-() const
{
    auto r = *this;
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> c(a.m_coeffs.size() + b.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
        for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
            c[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial &a, const Rational &k)
{
    auto c = a.m_coeffs;
    for (auto &v : c) {
        v *= k;
    }
    return Polynomial(std::move(c));
}

Polynomial operator/(const Polynomial &a, const Rational &k)
{
    return a * (Rational(1) / k);
}

Polynomial Polynomial::mul_x() const
{
    if (is_zero()) {
        return {};
    }
    std::vector<Rational> c(m_coeffs.size() + 1);
    std::copy(m_coeffs.begin(), m_coeffs.end(), c.begin() + 1);
    return Polynomial(std::move(c));
}

} // namespace rdh
