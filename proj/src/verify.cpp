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


#include <rdh/cfrac.hpp>
#include <rdh/dhankel.hpp>
#include <rdh/dorth.hpp>
#include <rdh/errors.hpp>
#include <rdh/gfparse.hpp>
#include <rdh/json_io.hpp>
#include <rdh/verify.hpp>

#include <algorithm>
#include <map>
#include <optional>

namespace rdh
{

namespace
{

using rows_t = std::vector<std::vector<Rational>>;

// Empty string on equality, otherwise the first difference.
std::string diff(std::span<const Rational> got, std::span<const Rational> want, const std::string &what)
{
    if (got.size() < want.size()) {
        return what + ": have " + std::to_string(got.size()) + " values, expected " + std::to_string(want.size());
    }
    for (std::size_t i = 0; i < want.size(); ++i) {
        if (got[i] != want[i]) {
            return what + "[" + std::to_string(i) + "] = " + got[i].to_string() + ", expected " + want[i].to_string();
        }
    }
    return {};
}

std::string diff_rows(const rows_t &got, const rows_t &want, const std::string &what)
{
    if (got.size() < want.size()) {
        return what + ": have " + std::to_string(got.size()) + " rows, expected " + std::to_string(want.size());
    }
    for (std::size_t n = 0; n < want.size(); ++n) {
        auto d = diff(got[n], want[n], what + " row " + std::to_string(n));
        if (!d.empty()) {
            return d;
        }
    }
    return {};
}

std::string diff_series(const Series &got, const Series &want, const std::string &what, std::size_t slack = 0)
{
    const auto n = std::min(got.order(), want.order()) - slack;
    return diff(got.coeffs().subspan(0, n), want.coeffs().subspan(0, n), what);
}

// Square m x m view of a Hessenberg production matrix.
rows_t square_rows(const ProductionMatrix &P, std::size_t m)
{
    rows_t out(m, std::vector<Rational>(m));
    for (std::size_t n = 0; n < m && n < P.size(); ++n) {
        for (std::size_t k = 0; k < m; ++k) {
            out[n][k] = P.at(n, k);
        }
    }
    return out;
}

Polynomial poly_from_text(const std::string &text)
{
    const auto s = eval_gf(text, 64, series_kind::ogf);
    return Polynomial(std::vector<Rational>(s.coeffs().begin(), s.coeffs().end()));
}

class Replay
{
public:
    explicit Replay(const json &doc)
        : m_doc(doc), m_kind(doc.at("kind") == "exponential" ? array_kind::exponential : array_kind::ordinary),
          m_d(doc.at("d").get<std::size_t>()), m_order(doc.at("order").get<std::size_t>())
    {
        if (doc.contains("za")) {
            m_Z = eval(doc["za"].at("Z").get<std::string>());
            m_A = eval(doc["za"].at("A").get<std::string>());
        }
    }

    std::string run(const std::string &check, const json &c)
    {
        using handler = std::string (Replay::*)(const json &);
        static const std::map<std::string, handler> handlers = {
            {"triangle", &Replay::triangle_check},
            {"production", &Replay::production_check},
            {"za", &Replay::za_check},
            {"inverse", &Replay::inverse_check},
            {"coefficient_pair", &Replay::coefficient_pair_check},
            {"coefficient_array", &Replay::coefficient_array_check},
            {"moment_pair", &Replay::moment_pair_check},
            {"integrals", &Replay::integrals_check},
            {"polynomials", &Replay::polynomials_check},
            {"stationary_recurrence", &Replay::stationary_check},
            {"columns", &Replay::columns_check},
            {"sequences", &Replay::sequences_check},
            {"hankel", &Replay::hankel_check},
            {"gamma", &Replay::gamma_check},
            {"binomial_invariance", &Replay::binomial_check},
            {"recurrence", &Replay::recurrence_check},
            {"cfrac", &Replay::cfrac_check},
            {"orthogonality", &Replay::orthogonality_check},
        };
        const auto it = handlers.find(check);
        if (it == handlers.end()) {
            return "unknown check \"" + check + "\"";
        }
        return (this->*(it->second))(c);
    }

private:
    Series eval(const std::string &text) const
    {
        return eval_gf(text, m_order, series_kind_for(m_kind));
    }

    const RiordanArray &array()
    {
        if (!m_array) {
            if (m_doc.contains("array")) {
                m_array.emplace(m_kind, eval(m_doc["array"].at("g").get<std::string>()),
                                eval(m_doc["array"].at("f").get<std::string>()));
            } else {
                m_array.emplace(from_za(m_kind, za().Z, za().A, m_order));
            }
        }
        return *m_array;
    }

    const ZASequences &za()
    {
        if (!m_za) {
            m_za = m_Z ? ZASequences{*m_Z, *m_A} : za_sequences(array());
        }
        return *m_za;
    }

    const ProductionMatrix &production()
    {
        if (!m_production) {
            m_production = production_via_series(array());
        }
        return *m_production;
    }

    const SequenceFamily &family()
    {
        if (!m_family) {
            m_family = column_sums(triangle(array()), m_d);
        }
        return *m_family;
    }

    const RiordanArray &coefficient_array()
    {
        if (!m_coeff) {
            m_coeff.emplace(coefficient_array_from_za(m_kind, za().Z, za().A, m_order));
        }
        return *m_coeff;
    }

    std::string triangle_check(const json &c)
    {
        const auto want = triangle_from_json(c.at("rows"));
        return diff_rows(triangle(array(), want.size()).rows(), want.rows(), "T");
    }

    std::string production_check(const json &c)
    {
        auto want = rows_t();
        for (const auto &r : c.at("rows")) {
            want.push_back(rationals_from_json(r));
        }
        const auto m = want.size();
        auto d = diff_rows(square_rows(production_via_matrix(triangle(array(), m + 1)), m), want, "P (matrix route)");
        if (d.empty()) {
            d = diff_rows(square_rows(production(), m), want, "P (series route)");
        }
        return d;
    }

    std::string za_check(const json &c)
    {
        const auto got = za_sequences(array());
        auto d = diff_series(got.Z, eval(c.at("Z")), "Z");
        return d.empty() ? diff_series(got.A, eval(c.at("A")), "A") : d;
    }

    std::string pair_check(const RiordanArray &R, const json &c, const std::string &what)
    {
        std::string d;
        if (c.contains("g")) {
            d = diff_series(R.g(), eval(c["g"]), what + " g");
        }
        if (d.empty() && c.contains("f")) {
            d = diff_series(R.f(), eval(c["f"]), what + " f");
        }
        return d;
    }

    std::string inverse_check(const json &c)
    {
        return pair_check(inverse(array()), c, "inverse");
    }

    std::string coefficient_pair_check(const json &c)
    {
        return pair_check(coefficient_array(), c, "coefficient array");
    }

    std::string moment_pair_check(const json &c)
    {
        return pair_check(array(), c, "array");
    }

    std::string coefficient_array_check(const json &c)
    {
        const auto want = triangle_from_json(c.at("rows"));
        return diff_rows(triangle(coefficient_array(), want.size()).rows(), want.rows(), "coefficient array");
    }

    std::string integrals_check(const json &c)
    {
        std::string d;
        // integrate() drops the top coefficient's contribution.
        if (c.contains("inv_A")) {
            d = diff_series(integrate(reciprocal(za().A)), eval(c["inv_A"]), "integral of 1/A", 1);
        }
        if (d.empty() && c.contains("Z_over_A")) {
            d = diff_series(integrate(za().Z / za().A), eval(c["Z_over_A"]), "integral of Z/A", 1);
        }
        return d;
    }

    std::string polynomials_check(const json &c)
    {
        std::vector<Polynomial> want;
        for (const auto &p : c.at("polys")) {
            want.push_back(poly_from_text(p.get<std::string>()));
        }
        const auto by_production = polys_from_production(production(), want.size());
        const auto by_determinants = polys_from_determinants(family(), want.size());
        for (std::size_t n = 0; n < want.size(); ++n) {
            if (by_production.polys[n] != want[n]) {
                return "P_" + std::to_string(n) + " (production) = " + by_production.polys[n].to_string()
                       + ", expected " + want[n].to_string();
            }
            if (by_determinants.polys[n] != want[n]) {
                return "P_" + std::to_string(n) + " (determinants) = " + by_determinants.polys[n].to_string()
                       + ", expected " + want[n].to_string();
            }
        }
        return {};
    }

    // P_n = (x - c_0) P_{n-1} - c_1 P_{n-2} - ... for n >= from.
    std::string stationary_check(const json &c)
    {
        const auto coeffs = rationals_from_json(c.at("coeffs"));
        const auto from = c.at("from").get<std::size_t>();
        const auto count = c.at("count").get<std::size_t>();
        const auto P = polys_from_production(production(), count);
        for (std::size_t n = from; n < count; ++n) {
            auto rhs = P.polys[n - 1].mul_x();
            for (std::size_t j = 0; j < coeffs.size() && j < n; ++j) {
                rhs -= P.polys[n - 1 - j] * coeffs[j];
            }
            if (rhs != P.polys[n]) {
                return "recurrence fails at n = " + std::to_string(n) + ": " + P.polys[n].to_string() + " vs "
                       + rhs.to_string();
            }
        }
        return {};
    }

    std::string columns_check(const json &c)
    {
        const auto &cols = c.at("columns");
        for (std::size_t k = 0; k < cols.size(); ++k) {
            const auto want = rationals_from_json(cols[k]);
            const auto T = triangle(array(), want.size());
            std::vector<Rational> got;
            for (std::size_t n = 0; n < want.size(); ++n) {
                got.push_back(T.at(n, k));
            }
            auto d = diff(got, want, "column " + std::to_string(k));
            if (!d.empty()) {
                return d;
            }
        }
        return {};
    }

    std::string sequences_check(const json &c)
    {
        const auto &seqs = c.at("sequences");
        if (seqs.size() != m_d) {
            return "expected " + std::to_string(m_d) + " sequences";
        }
        for (std::size_t r = 0; r < m_d; ++r) {
            auto d = diff(family().sequence(r), rationals_from_json(seqs[r]), "sequence " + std::to_string(r));
            if (!d.empty()) {
                return d;
            }
        }
        return {};
    }

    std::string hankel_check(const json &c)
    {
        const auto want = rationals_from_json(c.at("values"));
        return diff(dhankel_transform(family(), want.size() - 1), want, "h");
    }

    std::vector<Rational> gammas()
    {
        std::vector<Rational> g;
        for (std::size_t k = 0; k + m_d < production().size(); ++k) {
            g.push_back(production().at(k + m_d, k));
        }
        return g;
    }

    // Also checks the product formula against the d-Hankel transform for
    // every n the gamma values reach.
    std::string gamma_check(const json &c)
    {
        const auto g = gammas();
        auto d = diff(g, rationals_from_json(c.at("values")), "gamma");
        if (!d.empty()) {
            return d;
        }
        std::size_t n_max = 0;
        while (n_max + 1 < g.size() + m_d
               && dhankel_required_length(m_d, n_max + 1) <= family().length()) {
            ++n_max;
        }
        const auto h = dhankel_transform(family(), n_max);
        for (std::size_t n = 0; n <= n_max; ++n) {
            const auto p = product_formula(g, m_d, n);
            if (p != h[n]) {
                return "product formula at n = " + std::to_string(n) + ": " + p.to_string() + " vs h = "
                       + h[n].to_string();
            }
        }
        return {};
    }

    std::string binomial_check(const json &c)
    {
        const auto count = c.at("count").get<std::size_t>();
        rows_t transformed;
        for (const auto &s : family().sequences()) {
            transformed.push_back(binomial_transform(s));
        }
        return diff(dhankel_transform(SequenceFamily(transformed), count - 1),
                    dhankel_transform(family(), count - 1), "h after binomial transform");
    }

    std::string recurrence_check(const json &c)
    {
        const auto count = c.at("count").get<std::size_t>();
        const auto got = recurrence_from_determinants(family(), count);
        const auto want = bands_from_production(production(), 2);
        auto d = diff(want.alpha, got.alpha, "alpha");
        for (std::size_t j = 0; d.empty() && j < 2; ++j) {
            d = diff(want.bands[j], got.bands[j], "band " + std::to_string(j + 1));
        }
        return d;
    }

    std::string cfrac_check(const json &c)
    {
        const auto want = rationals_from_json(c.at("terms"));
        const auto cf = from_production(production(), m_d);
        return diff(expand(cf, want.size()).coeffs(), want, "expansion");
    }

    std::string orthogonality_check(const json &c)
    {
        const auto got = orthogonality_order(production());
        const auto want = c.at("d").get<std::size_t>();
        if (got != want) {
            return "order " + (got ? std::to_string(*got) : std::string("none")) + ", expected "
                   + std::to_string(want);
        }
        return {};
    }

    const json &m_doc;
    array_kind m_kind;
    std::size_t m_d;
    std::size_t m_order;
    std::optional<Series> m_Z, m_A;
    std::optional<RiordanArray> m_array, m_coeff;
    std::optional<ZASequences> m_za;
    std::optional<ProductionMatrix> m_production;
    std::optional<SequenceFamily> m_family;
};

} // namespace

const std::vector<std::string> &example_ids()
{
    static const std::vector<std::string> ids = {"e1", "e2", "e3", "e4", "e5"};
    return ids;
}

ExampleReport verify_example(std::string_view id)
{
    const auto text = detail::golden_json(id);
    if (text.empty()) {
        std::string known;
        for (const auto &i : example_ids()) {
            known += (known.empty() ? "" : ", ") + i;
        }
        throw input_error("unknown example \"" + std::string(id) + "\"; valid ids: " + known);
    }
    const auto doc = parse_json(std::string(text));
    ExampleReport report{std::string(id), doc.at("title").get<std::string>(), {}};
    Replay replay(doc);
    for (const auto &c : doc.at("checks")) {
        CheckResult r{c.at("check").get<std::string>(), c.value("origin", ""), false, {}};
        try {
            r.detail = replay.run(r.name, c);
            r.pass = r.detail.empty();
        } catch (const std::exception &e) {
            r.detail = std::string("error: ") + e.what();
        }
        report.checks.push_back(std::move(r));
    }
    return report;
}

} // namespace rdh
