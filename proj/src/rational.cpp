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
#include <rdh/rational.hpp>

#include <algorithm>
#include <cctype>

namespace rdh
{

const char *to_string(parse_error_kind k) noexcept
{
    switch (k) {
        case parse_error_kind::unbalanced_paren:
            return "unbalanced parenthesis";
        case parse_error_kind::unknown_identifier:
            return "unknown identifier";
        case parse_error_kind::malformed_number:
            return "malformed number";
        case parse_error_kind::trailing_input:
            return "trailing input";
        case parse_error_kind::unexpected_token:
            return "unexpected token";
    }
    return "parse error";
}

parse_error::parse_error(parse_error_kind kind, std::size_t offset, const std::string &what)
    : input_error("at offset " + std::to_string(offset) + ": " + to_string(kind) + (what.empty() ? "" : " (" + what + ")")),
      m_kind(kind), m_offset(offset)
{
}

Rational::Rational(const integer &num, const integer &den)
{
    if (den == 0) {
        throw precondition_error("rational with zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

namespace
{

bool is_int_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_int_literal(num) || !is_int_literal(den) || den.front() == '-' || den.front() == '+') {
        throw input_error("malformed rational '" + std::string(text) + "'");
    }
    const integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    const integer d(std::string(den), 10);
    if (d == 0) {
        throw input_error("malformed rational '" + std::string(text) + "': zero denominator");
    }
    return Rational(n, d);
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return m_value.get_num().get_str();
    }
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

Rational Rational::pow(long exponent) const
{
    if (exponent < 0) {
        if (is_zero()) {
            throw precondition_error("zero raised to a negative power");
        }
        return Rational(1) / pow(-exponent);
    }
    integer num, den;
    mpz_pow_ui(num.get_mpz_t(), m_value.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), m_value.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw precondition_error("division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

integer factorial(std::size_t n)
{
    integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

integer binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace rdh
