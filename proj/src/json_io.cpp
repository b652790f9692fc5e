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
#include <rdh/json_io.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace rdh
{

json to_json(const Rational &r)
{
    return r.to_string();
}

json to_json(std::span<const Rational> v)
{
    auto a = json::array();
    for (const auto &r : v) {
        a.push_back(r.to_string());
    }
    return a;
}

json to_json(const std::vector<std::vector<Rational>> &rows)
{
    auto a = json::array();
    for (const auto &row : rows) {
        a.push_back(to_json(std::span<const Rational>(row)));
    }
    return a;
}

json to_json(const Series &s)
{
    return {{"kind", to_string(s.kind())}, {"order", s.order()}, {"coeffs", to_json(s.coeffs())},
            {"terms", to_json(s.terms())}};
}

json to_json(const TriangleSlice &t)
{
    return to_json(t.rows());
}

json to_json(const ProductionMatrix &p)
{
    return to_json(p.rows());
}

json to_json(const SequenceFamily &f)
{
    return {{"d", f.d()}, {"sequences", to_json(f.sequences())}};
}

json to_json(const PolyFamily &pf)
{
    auto a = json::array();
    for (const auto &p : pf.polys) {
        a.push_back(to_json(p.coeffs()));
    }
    return a;
}

json to_json(const DFraction &cf)
{
    return {{"d", cf.d()}, {"bands", to_json(cf.bands())}};
}

json to_json(const RecurrenceBands &rb)
{
    return {{"d", rb.d}, {"alpha", to_json(rb.alpha)}, {"bands", to_json(rb.bands)}};
}

json hankel_to_json(std::span<const Rational> h)
{
    return {{"h", to_json(h)}};
}

Rational rational_from_json(const json &j)
{
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    throw input_error("expected a rational string, got " + j.dump());
}

std::vector<Rational> rationals_from_json(const json &j)
{
    if (!j.is_array()) {
        throw input_error("expected an array of rationals, got " + j.dump());
    }
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto &e : j) {
        out.push_back(rational_from_json(e));
    }
    return out;
}

namespace
{

std::vector<std::vector<Rational>> rows_from_json(const json &j)
{
    if (!j.is_array()) {
        throw input_error("expected an array of row arrays");
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto &r : j) {
        rows.push_back(rationals_from_json(r));
    }
    return rows;
}

const json &member(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw input_error(std::string("missing \"") + key + "\" in JSON input");
    }
    return j.at(key);
}

} // namespace

SequenceFamily family_from_json(const json &j)
{
    auto seqs = rows_from_json(member(j, "sequences"));
    if (j.contains("d")) {
        const auto d = j.at("d");
        if (!d.is_number_unsigned() || d.get<std::size_t>() != seqs.size()) {
            throw input_error("\"d\" must equal the number of sequences");
        }
    }
    return SequenceFamily(std::move(seqs));
}

ProductionMatrix production_from_json(const json &j)
{
    const json &src = j.is_object() ? member(j, "production") : j;
    auto rows = rows_from_json(src);
    for (std::size_t n = 0; n < rows.size(); ++n) {
        auto &r = rows[n];
        if (r.size() == n + 1 && n + 1 == rows.size()) {
            // The last row of a square matrix lacks its superdiagonal entry.
            rows.pop_back();
            break;
        }
        if (r.size() < n + 2) {
            throw input_error("production row " + std::to_string(n) + " needs at least " + std::to_string(n + 2)
                              + " entries");
        }
        for (std::size_t k = n + 2; k < r.size(); ++k) {
            if (!r[k].is_zero()) {
                throw input_error("production row " + std::to_string(n)
                                  + " has a nonzero entry above the superdiagonal");
            }
        }
        r.resize(n + 2);
    }
    return ProductionMatrix(std::move(rows));
}

TriangleSlice triangle_from_json(const json &j)
{
    const json &src = j.is_object() ? member(j, "triangle") : j;
    auto rows = rows_from_json(src);
    for (std::size_t n = 0; n < rows.size(); ++n) {
        for (std::size_t k = n + 1; k < rows[n].size(); ++k) {
            if (!rows[n][k].is_zero()) {
                throw input_error("triangle row " + std::to_string(n) + " has a nonzero entry above the diagonal");
            }
        }
        rows[n].resize(n + 1);
    }
    return TriangleSlice(std::move(rows));
}

PolyFamily polys_from_json(const json &j)
{
    const json &src = j.is_object() ? member(j, "polynomials") : j;
    PolyFamily pf;
    for (auto &c : rows_from_json(src)) {
        pf.polys.emplace_back(std::move(c));
    }
    return pf;
}

DFraction dfraction_from_json(const json &j)
{
    const json &src = j.is_object() && j.contains("cfrac") ? j.at("cfrac") : j;
    const auto &d = member(src, "d");
    if (!d.is_number_unsigned()) {
        throw input_error("\"d\" must be a nonnegative integer");
    }
    return DFraction(d.get<std::size_t>(), rows_from_json(member(src, "bands")));
}

std::vector<Rational> hankel_from_json(const json &j)
{
    return rationals_from_json(member(j, "h"));
}

json parse_json(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
}

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

std::string to_csv(const std::vector<std::vector<Rational>> &rows)
{
    std::string out;
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += row[i].to_string();
        }
        out += '\n';
    }
    return out;
}

} // namespace rdh
