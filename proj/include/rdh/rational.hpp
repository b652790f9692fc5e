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

#ifndef RDH_RATIONAL_HPP
#define RDH_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rdh
{

using integer = mpz_class;

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator. Thin value wrapper over mpq_class.
class Rational
{
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T n) : m_value(static_cast<long>(n))
    {
    }
    template <std::unsigned_integral T>
    Rational(T n) : m_value(static_cast<unsigned long>(n))
    {
    }
    Rational(const integer &n) : m_value(n) {}
    Rational(const integer &num, const integer &den);

    // Accepts "n", "-n", "p/q" (whitespace not allowed). Throws input_error.
    static Rational parse(std::string_view text);

    integer numerator() const
    {
        return m_value.get_num();
    }
    integer denominator() const
    {
        return m_value.get_den();
    }
    bool is_zero() const
    {
        return sgn(m_value) == 0;
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }
    int sign() const
    {
        return sgn(m_value);
    }

    // "n" when integral, "p/q" otherwise.
    std::string to_string() const;

    Rational pow(long exponent) const;

    Rational &operator+=(const Rational &o)
    {
        m_value += o.m_value;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        m_value -= o.m_value;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        m_value *= o.m_value;
        return *this;
    }
    // Throws precondition_error on division by zero.
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b)
    {
        return a += b;
    }
    friend Rational operator-(Rational a, const Rational &b)
    {
        return a -= b;
    }
    friend Rational operator*(Rational a, const Rational &b)
    {
        return a *= b;
    }
    friend Rational operator/(Rational a, const Rational &b)
    {
        return a /= b;
    }
    Rational operator-() const
    {
        Rational r;
        r.m_value = -m_value;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class &get_mpq() const
    {
        return m_value;
    }

private:
    mpq_class m_value;
};

std::ostream &operator<<(std::ostream &, const Rational &);

integer factorial(std::size_t n);
integer binomial(std::size_t n, std::size_t k);

} // namespace rdh

#endif
