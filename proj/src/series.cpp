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
#include <rdh/series.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace rdh
{

const char *to_string(series_kind k) noexcept
{
    return k == series_kind::ogf ? "ogf" : "egf";
}

Series::Series(series_kind kind, std::vector<Rational> coeffs) : m_kind(kind), m_coeffs(std::move(coeffs))
{
    if (m_coeffs.empty()) {
        throw precondition_error("a series needs at least one coefficient");
    }
}

Series Series::zero(std::size_t order, series_kind kind)
{
    return Series(kind, std::vector<Rational>(order));
}

Series Series::constant(const Rational &c, std::size_t order, series_kind kind)
{
    auto s = zero(order, kind);
    s.m_coeffs[0] = c;
    return s;
}

Series Series::x(std::size_t order, series_kind kind)
{
    auto s = zero(order, kind);
    if (order > 1) {
        s.m_coeffs[1] = 1;
    }
    return s;
}

Series Series::polynomial(std::vector<Rational> coeffs, std::size_t order, series_kind kind)
{
    coeffs.resize(order);
    return Series(kind, std::move(coeffs));
}

const Rational &Series::coeff(std::size_t n) const
{
    if (n >= order()) {
        throw truncation_error("coefficient " + std::to_string(n) + " requested from a series truncated at order "
                               + std::to_string(order()));
    }
    return m_coeffs[n];
}

Rational Series::seq_term(std::size_t n) const
{
    const auto &c = coeff(n);
    return m_kind == series_kind::ogf ? c : c * Rational(factorial(n));
}

std::vector<Rational> Series::terms() const
{
    std::vector<Rational> out;
    out.reserve(order());
    for (std::size_t n = 0; n < order(); ++n) {
        out.push_back(seq_term(n));
    }
    return out;
}

Series Series::truncated(std::size_t order) const
{
    auto c = m_coeffs;
    c.resize(std::min(order, this->order()));
    return Series(m_kind, std::move(c));
}

Series Series::retagged(series_kind kind) const
{
    return Series(kind, m_coeffs);
}

Series Series::operator-() const
{
    auto r = *this;
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

namespace
{

void check_kinds(const Series &a, const Series &b)
{
    if (a.kind() != b.kind()) {
        throw precondition_error(std::string("series kind mismatch: ") + to_string(a.kind()) + " vs "
                                 + to_string(b.kind()));
    }
}

std::vector<Rational> coeff_vec(const Series &s, std::size_t n)
{
    return {s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(n)};
}

} // namespace

Series add(const Series &a, const Series &b)
{
    check_kinds(a, b);
    const auto n = std::min(a.order(), b.order());
    auto c = coeff_vec(a, n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] += b.coeffs()[i];
    }
    return Series(a.kind(), std::move(c));
}

Series sub(const Series &a, const Series &b)
{
    return add(a, -b);
}

Series scale(const Series &a, const Rational &k)
{
    auto c = coeff_vec(a, a.order());
    for (auto &v : c) {
        v *= k;
    }
    return Series(a.kind(), std::move(c));
}

Series mul(const Series &a, const Series &b)
{
    check_kinds(a, b);
    const auto n = std::min(a.order(), b.order());
    const auto ac = a.coeffs(), bc = b.coeffs();
    std::vector<Rational> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (ac[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            c[i + j] += ac[i] * bc[j];
        }
    }
    return Series(a.kind(), std::move(c));
}

Series div(const Series &a, const Series &b)
{
    check_kinds(a, b);
    if (b.coeffs()[0].is_zero()) {
        throw precondition_error("division by a series with zero constant term");
    }
    const auto n = std::min(a.order(), b.order());
    const auto bc = b.coeffs();
    std::vector<Rational> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc = a.coeffs()[i];
        for (std::size_t j = 1; j <= i; ++j) {
            acc -= bc[j] * q[i - j];
        }
        q[i] = acc / bc[0];
    }
    return Series(a.kind(), std::move(q));
}

Series reciprocal(const Series &a)
{
    return div(Series::constant(1, a.order(), a.kind()), a);
}

Series mul_x(const Series &s)
{
    std::vector<Rational> c(s.order());
    std::copy(s.coeffs().begin(), s.coeffs().end() - 1, c.begin() + 1);
    return Series(s.kind(), std::move(c));
}

Series div_x(const Series &s)
{
    if (!s.coeffs()[0].is_zero()) {
        throw precondition_error("cannot divide by x: constant term is nonzero");
    }
    if (s.order() < 2) {
        throw truncation_error("cannot divide an order-1 series by x");
    }
    return Series(s.kind(), {s.coeffs().begin() + 1, s.coeffs().end()});
}

Series compose(const Series &outer, const Series &inner)
{
    if (!inner.coeffs()[0].is_zero()) {
        throw precondition_error("composition requires an inner series with zero constant term");
    }
    const auto n = std::min(outer.order(), inner.order());
    // Horner in the inner series; each step is a truncated Cauchy product.
    const auto in = inner.retagged(outer.kind()).truncated(n);
    auto acc = Series::constant(outer.coeffs()[n - 1], n, outer.kind());
    for (std::size_t i = n - 1; i-- > 0;) {
        acc = mul(acc, in);
        auto c = coeff_vec(acc, n);
        c[0] += outer.coeffs()[i];
        acc = Series(outer.kind(), std::move(c));
    }
    return acc;
}

Series reversion(const Series &f)
{
    if (f.order() < 2) {
        throw truncation_error("reversion needs at least two coefficients");
    }
    if (!f.coeffs()[0].is_zero() || f.coeffs()[1].is_zero()) {
        throw precondition_error("reversion requires f[0] == 0 and f[1] != 0");
    }
    // Lagrange inversion: [x^n] rev(f) = (1/n) [x^(n-1)] (x/f)^n.
    const auto n = f.order();
    const auto h = reciprocal(div_x(f));
    std::vector<Rational> r(n);
    auto hp = h;
    for (std::size_t k = 1; k < n; ++k) {
        r[k] = hp.coeffs()[k - 1] / Rational(k);
        if (k + 1 < n) {
            hp = mul(hp, h);
        }
    }
    return Series(f.kind(), std::move(r));
}

Series derivative(const Series &s)
{
    if (s.order() < 2) {
        throw truncation_error("derivative of an order-1 series has no known coefficients");
    }
    std::vector<Rational> c(s.order() - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = s.coeffs()[i + 1] * Rational(i + 1);
    }
    return Series(s.kind(), std::move(c));
}

Series integrate(const Series &s)
{
    std::vector<Rational> c(s.order());
    for (std::size_t i = 1; i < c.size(); ++i) {
        c[i] = s.coeffs()[i - 1] / Rational(i);
    }
    return Series(s.kind(), std::move(c));
}

Series exp_series(const Series &s)
{
    if (!s.coeffs()[0].is_zero()) {
        throw precondition_error("exp requires a zero constant term");
    }
    const auto n = s.order();
    const auto sc = s.coeffs();
    std::vector<Rational> e(n);
    e[0] = 1;
    // n e_n = sum_{k=1}^n k s_k e_{n-k}, from e' = s' e.
    for (std::size_t m = 1; m < n; ++m) {
        Rational acc;
        for (std::size_t k = 1; k <= m; ++k) {
            if (!sc[k].is_zero()) {
                acc += Rational(k) * sc[k] * e[m - k];
            }
        }
        e[m] = acc / Rational(m);
    }
    return Series(s.kind(), std::move(e));
}

Series log_series(const Series &s)
{
    if (s.coeffs()[0] != Rational(1)) {
        throw precondition_error("log requires constant term 1");
    }
    const auto n = s.order();
    const auto sc = s.coeffs();
    std::vector<Rational> l(n);
    // s l' = s'  =>  m l_m = m s_m - sum_{k=1}^{m-1} k l_k s_{m-k}.
    for (std::size_t m = 1; m < n; ++m) {
        Rational acc = Rational(m) * sc[m];
        for (std::size_t k = 1; k < m; ++k) {
            acc -= Rational(k) * l[k] * sc[m - k];
        }
        l[m] = acc / Rational(m);
    }
    return Series(s.kind(), std::move(l));
}

Series sqrt_series(const Series &s)
{
    if (s.coeffs()[0] != Rational(1)) {
        throw precondition_error("sqrt requires constant term 1");
    }
    const auto n = s.order();
    const auto sc = s.coeffs();
    std::vector<Rational> r(n);
    r[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        Rational acc = sc[m];
        for (std::size_t k = 1; k < m; ++k) {
            acc -= r[k] * r[m - k];
        }
        r[m] = acc / Rational(2);
    }
    return Series(s.kind(), std::move(r));
}

Series pow_int(const Series &s, long exponent)
{
    if (exponent < 0) {
        return pow_int(reciprocal(s), -exponent);
    }
    auto result = Series::constant(1, s.order(), s.kind());
    auto base = s;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1u) {
            result = mul(result, base);
        }
        e >>= 1;
        if (e != 0) {
            base = mul(base, base);
        }
    }
    return result;
}

Series convert_kind(const Series &s, series_kind to)
{
    if (s.kind() == to) {
        return s;
    }
    auto c = coeff_vec(s, s.order());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Rational f(factorial(i));
        if (to == series_kind::ogf) {
            c[i] *= f;
        } else {
            c[i] /= f;
        }
    }
    return Series(to, std::move(c));
}

std::vector<Rational> binomial_transform(std::span<const Rational> a)
{
    std::vector<Rational> b(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            b[n] += Rational(binomial(n, k)) * a[k];
        }
    }
    return b;
}

} // namespace rdh
