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


// rdh: command-line front end for the rdh library.
//
// Exit codes: 0 success, 1 a verify check failed, 2 bad input,
// 3 mathematical precondition failure, 4 insufficient data.

#include <rdh/cfrac.hpp>
#include <rdh/dhankel.hpp>
#include <rdh/dorth.hpp>
#include <rdh/errors.hpp>
#include <rdh/gfparse.hpp>
#include <rdh/json_io.hpp>
#include <rdh/riordan.hpp>
#include <rdh/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace
{

using namespace rdh;
using rows_t = std::vector<std::vector<Rational>>;

enum exit_code { ok = 0, check_failed = 1, bad_input = 2, precondition = 3, insufficient = 4 };

struct Format {
    std::string value = "json";
};

void add_format(CLI::App *cmd, Format &f)
{
    cmd->add_option("--format", f.value, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
}

std::string join(std::span<const Rational> v, const char *sep = ", ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? sep : "") + v[i].to_string();
    }
    return s;
}

// Right-aligned columns; rows may be ragged.
void print_table(std::ostream &out, const rows_t &rows)
{
    std::size_t width = 1;
    for (const auto &r : rows) {
        for (const auto &v : r) {
            width = std::max(width, v.to_string().size());
        }
    }
    for (const auto &r : rows) {
        std::string line;
        for (std::size_t k = 0; k < r.size(); ++k) {
            const auto s = r[k].to_string();
            line += std::string(width - s.size() + (k ? 1 : 0), ' ') + s;
        }
        out << line << '\n';
    }
}

rows_t square(const ProductionMatrix &P)
{
    rows_t out(P.size(), std::vector<Rational>(P.size()));
    for (std::size_t n = 0; n < P.size(); ++n) {
        for (std::size_t k = 0; k < P.size(); ++k) {
            out[n][k] = P.at(n, k);
        }
    }
    return out;
}

// A Riordan array given either by (g, f) or by Z and A.
struct ArraySpec {
    std::string g, f, Z, A;
    bool from_za = false;
    std::string kind = "ogf";

    void add_to(CLI::App *cmd)
    {
        cmd->add_option("--g", g, "Generating function g");
        cmd->add_option("--f", f, "Generating function f");
        cmd->add_flag("--from-za", from_za, "Build the array from its Z- and A-sequences");
        cmd->add_option("--Z", Z, "Z-sequence expression");
        cmd->add_option("--A", A, "A-sequence expression");
        cmd->add_option("--kind", kind, "ogf (ordinary) or egf (exponential)")
            ->check(CLI::IsMember({"ogf", "egf", "ordinary", "exponential"}));
    }

    bool given() const
    {
        return from_za || !g.empty() || !f.empty();
    }

    array_kind akind() const
    {
        return kind == "egf" || kind == "exponential" ? array_kind::exponential : array_kind::ordinary;
    }

    RiordanArray build(std::size_t order) const
    {
        const auto sk = series_kind_for(akind());
        if (from_za) {
            if (Z.empty() || A.empty()) {
                throw input_error("--from-za needs both --Z and --A");
            }
            // Parse both before evaluating either.
            const auto z = parse_gf(Z);
            const auto a = parse_gf(A);
            return rdh::from_za(akind(), eval_gf(z, order, sk), eval_gf(a, order, sk), order);
        }
        if (g.empty() || f.empty()) {
            throw input_error("an array needs --g and --f, or --from-za with --Z and --A");
        }
        const auto ge = parse_gf(g);
        const auto fe = parse_gf(f);
        return RiordanArray(akind(), eval_gf(ge, order, sk), eval_gf(fe, order, sk));
    }
};

// --- gf ----------------------------------------------------------------

struct GfOpts {
    std::string expr;
    std::size_t order = 16;
    std::string kind = "ogf";
    Format fmt;
};

int cmd_gf(const GfOpts &o)
{
    const auto s = eval_gf(o.expr, o.order, o.kind == "egf" ? series_kind::egf : series_kind::ogf);
    if (o.fmt.value == "json") {
        std::cout << to_json(s).dump(2) << '\n';
    } else if (o.fmt.value == "csv") {
        std::cout << join(s.terms(), ",") << '\n';
    } else {
        std::cout << "kind: " << to_string(s.kind()) << "\norder: " << s.order() << "\nterms: " << join(s.terms())
                  << '\n';
    }
    return ok;
}

// --- riordan -----------------------------------------------------------

struct RiordanOpts {
    ArraySpec spec;
    std::size_t rows = 7;
    std::size_t order = 16;
    bool inverse = false, production = false, za = false;
    std::size_t column_sums = 0;
    Format fmt;
};

int cmd_riordan(const RiordanOpts &o)
{
    // The production matrix for `rows` rows needs one more row of the array.
    auto R = o.spec.build(std::max(o.order, o.rows + 1));
    if (o.inverse) {
        R = inverse(R);
    }
    const auto T = triangle(R, o.rows);
    std::optional<ProductionMatrix> P;
    std::optional<ZASequences> za;
    std::optional<SequenceFamily> F;
    if (o.production) {
        P = production_via_matrix(triangle(R, o.rows + 1));
    }
    if (o.za) {
        za = za_sequences(R);
    }
    if (o.column_sums > 0) {
        F = column_sums(T, o.column_sums);
    }

    if (o.fmt.value == "json") {
        json j;
        j["kind"] = to_string(R.kind());
        j["g"] = to_json(R.g().coeffs());
        j["f"] = to_json(R.f().coeffs());
        j["triangle"] = to_json(T);
        if (P) {
            j["production"] = to_json(*P);
        }
        if (za) {
            j["Z"] = to_json(za->Z.coeffs());
            j["A"] = to_json(za->A.coeffs());
        }
        if (F) {
            j["d"] = F->d();
            j["sequences"] = to_json(F->sequences());
        }
        std::cout << j.dump(2) << '\n';
    } else if (o.fmt.value == "csv") {
        // Only one table fits a CSV stream; the most specific one wins.
        if (F) {
            std::cout << to_csv(F->sequences());
        } else if (P) {
            std::cout << to_csv(square(*P));
        } else {
            std::cout << to_csv(T.rows());
        }
    } else {
        std::cout << "triangle (" << to_string(R.kind()) << ", " << T.size() << " rows)\n";
        print_table(std::cout, T.rows());
        if (P) {
            std::cout << "\nproduction matrix\n";
            print_table(std::cout, square(*P));
        }
        if (za) {
            std::cout << "\nZ: " << join(za->Z.coeffs()) << "\nA: " << join(za->A.coeffs()) << '\n';
        }
        if (F) {
            std::cout << "\ncolumn sums (d = " << F->d() << ")\n";
            print_table(std::cout, F->sequences());
        }
    }
    return ok;
}

// --- dhankel -----------------------------------------------------------

struct DhankelOpts {
    std::string input;
    ArraySpec spec;
    std::size_t d = 0;
    std::optional<std::size_t> n;
    std::size_t order = 16;
    bool gamma = false;
    Format fmt;
};

std::size_t max_index(const SequenceFamily &F)
{
    if (F.length() == 0) {
        throw insufficient_data_error("sequences are empty");
    }
    std::size_t n = 0;
    while (dhankel_required_length(F.d(), n + 1) <= F.length()) {
        ++n;
    }
    return n;
}

int cmd_dhankel(const DhankelOpts &o)
{
    std::optional<SequenceFamily> F;
    std::optional<ProductionMatrix> P;
    if (!o.input.empty()) {
        const auto doc = read_json_file(o.input);
        F = family_from_json(doc);
        if (o.d != 0 && o.d != F->d()) {
            throw input_error("--d " + std::to_string(o.d) + " does not match the " + std::to_string(F->d())
                              + " sequences in " + o.input);
        }
        if (doc.is_object() && doc.contains("production")) {
            P = production_from_json(doc);
        }
    } else if (o.spec.given()) {
        if (o.d == 0) {
            throw input_error("--d is required with an array specification");
        }
        auto rows = o.order;
        if (o.n) {
            rows = std::max(rows, dhankel_required_length(o.d, *o.n));
        }
        const auto R = o.spec.build(rows + 1);
        const auto T = triangle(R, rows + 1);
        F = column_sums(triangle(R, rows), o.d);
        if (o.gamma) {
            P = production_via_matrix(T);
        }
    } else {
        throw input_error("dhankel needs --input FILE or an array specification");
    }
    const auto n = o.n.value_or(max_index(*F));
    const auto h = dhankel_transform(*F, n);

    std::vector<Rational> gamma, product;
    bool match = true;
    if (o.gamma) {
        if (!P) {
            throw input_error("--gamma needs a production matrix (array specification or \"production\" key)");
        }
        const auto d = F->d();
        for (std::size_t k = 0; k + d < P->size(); ++k) {
            gamma.push_back(P->at(k + d, k));
        }
        for (std::size_t i = 0; i <= n; ++i) {
            if (i >= gamma.size() + d) {
                throw insufficient_data_error("product formula for h_" + std::to_string(i) + " needs gamma_"
                                              + std::to_string(i - d) + "; increase --order");
            }
            product.push_back(product_formula(gamma, d, i));
            match = match && product.back() == h[i];
        }
    }

    if (o.fmt.value == "json") {
        json j = to_json(*F);
        j["h"] = to_json(h);
        if (o.gamma) {
            j["gamma"] = to_json(gamma);
            j["product_formula"] = to_json(product);
            j["product_formula_match"] = match;
        }
        std::cout << j.dump(2) << '\n';
    } else if (o.fmt.value == "csv") {
        std::cout << join(h, ",") << '\n';
    } else {
        std::cout << "d = " << F->d() << "\nh: " << join(h) << '\n';
        if (o.gamma) {
            std::cout << "gamma: " << join(gamma) << "\nproduct formula: " << (match ? "PASS" : "FAIL") << '\n';
        }
    }
    return ok;
}

// --- dorth -------------------------------------------------------------

struct DorthOpts {
    std::string input;
    ArraySpec spec;
    std::string method = "auto";
    std::size_t d = 0;
    std::optional<std::size_t> count;
    std::size_t order = 16;
    bool recurrence = false;
    Format fmt;
};

int cmd_dorth(const DorthOpts &o)
{
    std::optional<ProductionMatrix> P;
    std::optional<SequenceFamily> F;
    if (!o.input.empty()) {
        const auto doc = read_json_file(o.input);
        if (doc.is_array() || doc.contains("production")) {
            P = production_from_json(doc);
        }
        if (doc.is_object() && doc.contains("sequences")) {
            F = family_from_json(doc);
        }
    } else if (o.spec.given()) {
        const auto R = o.spec.build(o.order + 1);
        P = production_via_matrix(triangle(R, o.order + 1));
        if (o.d > 0) {
            F = column_sums(triangle(R, o.order), o.d);
        }
    } else {
        throw input_error("dorth needs --input FILE or an array specification");
    }

    const bool by_production = o.method == "production" || (o.method == "auto" && P);
    PolyFamily PF;
    if (by_production) {
        if (!P) {
            throw input_error("--method production needs a production matrix");
        }
        PF = polys_from_production(*P, o.count.value_or(P->size() + 1));
    } else {
        if (!F) {
            throw input_error("--method determinants needs sequences (\"sequences\" key, or --d with an array)");
        }
        PF = polys_from_determinants(*F, o.count.value_or(max_index(*F) + 1));
    }

    std::optional<std::size_t> order;
    std::optional<RecurrenceBands> bands, from_det;
    if (P) {
        order = orthogonality_order(*P);
        if (order) {
            bands = bands_from_production(*P, *order);
        }
    }
    if (o.recurrence) {
        if (!F) {
            throw input_error("--recurrence needs sequences");
        }
        from_det = recurrence_from_determinants(*F, max_index(*F));
    }

    if (o.fmt.value == "json") {
        json j;
        j["polynomials"] = to_json(PF);
        auto text = json::array();
        for (const auto &p : PF.polys) {
            text.push_back(p.to_string());
        }
        j["text"] = text;
        j["orthogonality_order"] = order ? json(*order) : json(nullptr);
        if (bands) {
            j["recurrence"] = to_json(*bands);
        }
        if (from_det) {
            j["recurrence_from_determinants"] = to_json(*from_det);
        }
        std::cout << j.dump(2) << '\n';
    } else if (o.fmt.value == "csv") {
        std::cout << to_csv(coefficient_triangle(PF).rows());
    } else {
        for (std::size_t n = 0; n < PF.polys.size(); ++n) {
            std::cout << "P_" << n << " = " << PF.polys[n].to_string() << '\n';
        }
        if (P) {
            std::cout << "orthogonality order: " << (order ? std::to_string(*order) : std::string("none")) << '\n';
        }
        if (bands) {
            std::cout << "alpha: " << join(bands->alpha) << '\n';
            for (std::size_t j = 0; j < bands->bands.size(); ++j) {
                std::cout << "band " << j + 1 << ": " << join(bands->bands[j]) << '\n';
            }
        }
        if (from_det) {
            std::cout << "determinantal alpha: " << join(from_det->alpha) << '\n';
            for (std::size_t j = 0; j < from_det->bands.size(); ++j) {
                std::cout << "determinantal band " << j + 1 << ": " << join(from_det->bands[j]) << '\n';
            }
        }
    }
    return ok;
}

// --- cfrac -------------------------------------------------------------

struct CfracOpts {
    std::string input;
    ArraySpec spec;
    std::optional<std::size_t> d;
    std::size_t terms = 8;
    std::optional<std::size_t> levels;
    Format fmt;
};

int cmd_cfrac(const CfracOpts &o)
{
    std::optional<DFraction> cf;
    std::optional<ProductionMatrix> P;
    if (!o.input.empty()) {
        const auto doc = read_json_file(o.input);
        if (doc.is_object() && (doc.contains("bands") || doc.contains("cfrac"))) {
            cf = dfraction_from_json(doc);
        } else {
            P = production_from_json(doc);
        }
    } else if (o.spec.given()) {
        // Enough levels for the requested terms at any band width d <= terms.
        const auto rows = 2 * o.terms + 2;
        P = production_via_matrix(triangle(o.spec.build(rows + 1), rows + 1));
    } else {
        throw input_error("cfrac needs --input FILE or an array specification");
    }
    if (!cf) {
        auto d = o.d ? o.d : orthogonality_order(*P);
        if (!d) {
            throw precondition_error("production matrix is not visibly banded; pass --d");
        }
        cf = from_production(*P, *d);
    }
    const auto s = expand(*cf, o.terms, o.levels);

    if (o.fmt.value == "json") {
        json j;
        j["cfrac"] = to_json(*cf);
        j["expansion"] = to_json(s.coeffs());
        std::cout << j.dump(2) << '\n';
    } else if (o.fmt.value == "csv") {
        std::cout << join(s.coeffs(), ",") << '\n';
    } else {
        std::cout << "d = " << cf->d() << '\n';
        for (std::size_t j = 0; j < cf->bands().size(); ++j) {
            std::cout << "c(" << j << ",k): " << join(cf->bands()[j]) << '\n';
        }
        std::cout << "expansion: " << join(s.coeffs()) << '\n';
    }
    return ok;
}

// --- verify ------------------------------------------------------------

int cmd_verify(const std::string &id, const Format &fmt)
{
    std::vector<std::string> ids;
    if (id == "all") {
        ids = example_ids();
    } else {
        ids.push_back(id);
    }
    std::vector<ExampleReport> reports;
    for (const auto &i : ids) {
        reports.push_back(verify_example(i));
    }
    bool all = true;
    if (fmt.value == "json") {
        auto j = json::array();
        for (const auto &r : reports) {
            json e;
            e["id"] = r.id;
            e["pass"] = r.pass();
            auto checks = json::array();
            for (const auto &c : r.checks) {
                checks.push_back({{"check", c.name}, {"origin", c.origin}, {"pass", c.pass}, {"detail", c.detail}});
            }
            e["checks"] = checks;
            j.push_back(e);
            all = all && r.pass();
        }
        std::cout << j.dump(2) << '\n';
    } else {
        for (const auto &r : reports) {
            std::cout << r.id << ": " << r.title << '\n';
            for (const auto &c : r.checks) {
                std::cout << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.origin << ")";
                if (!c.pass) {
                    std::cout << "\n        " << c.detail;
                }
                std::cout << '\n';
            }
            std::cout << r.id << ": " << (r.pass() ? "PASS" : "FAIL") << '\n';
            all = all && r.pass();
        }
    }
    return all ? ok : check_failed;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact Riordan arrays, d-Hankel transforms, d-orthogonal polynomials and continued fractions"};
    app.require_subcommand(1);

    GfOpts gf;
    auto *gf_cmd = app.add_subcommand("gf", "Expand a generating function expression");
    gf_cmd->add_option("--expr", gf.expr, "Expression in x")->required();
    gf_cmd->add_option("--order", gf.order, "Number of coefficients")->check(CLI::PositiveNumber);
    gf_cmd->add_option("--kind", gf.kind, "ogf or egf")->check(CLI::IsMember({"ogf", "egf"}));
    add_format(gf_cmd, gf.fmt);

    RiordanOpts ri;
    auto *ri_cmd = app.add_subcommand("riordan", "Riordan array tables");
    ri.spec.add_to(ri_cmd);
    ri_cmd->add_option("--rows", ri.rows, "Rows of the triangle")->check(CLI::PositiveNumber);
    ri_cmd->add_option("--order", ri.order, "Series truncation order")->check(CLI::PositiveNumber);
    ri_cmd->add_flag("--inverse", ri.inverse, "Use the inverse array");
    ri_cmd->add_flag("--production", ri.production, "Print the production matrix");
    ri_cmd->add_flag("--za", ri.za, "Print the Z- and A-sequences");
    ri_cmd->add_option("--column-sums", ri.column_sums, "Emit d sequences of partial column sums")
        ->check(CLI::PositiveNumber);
    add_format(ri_cmd, ri.fmt);

    DhankelOpts dh;
    auto *dh_cmd = app.add_subcommand("dhankel", "d-Hankel transform of a sequence family");
    dh_cmd->add_option("--input", dh.input, "JSON file with \"sequences\"");
    dh.spec.add_to(dh_cmd);
    dh_cmd->add_option("--d", dh.d, "Number of sequences (column sums of the array)");
    dh_cmd->add_option("--n", dh.n, "Largest index n of h_n");
    dh_cmd->add_option("--order", dh.order, "Array rows used for the sequences")->check(CLI::PositiveNumber);
    dh_cmd->add_flag("--gamma", dh.gamma, "Compare with the product formula over gamma_k = p(k+d,k)");
    add_format(dh_cmd, dh.fmt);

    DorthOpts dor;
    auto *dor_cmd = app.add_subcommand("dorth", "d-orthogonal polynomial family");
    dor_cmd->add_option("--input", dor.input, "JSON file with \"production\" and/or \"sequences\"");
    dor.spec.add_to(dor_cmd);
    dor_cmd->add_option("--method", dor.method, "production, determinants or auto")
        ->check(CLI::IsMember({"auto", "production", "determinants"}));
    dor_cmd->add_option("--d", dor.d, "Sequences to form from an array specification");
    dor_cmd->add_option("--count", dor.count, "Number of polynomials");
    dor_cmd->add_option("--order", dor.order, "Production matrix rows")->check(CLI::PositiveNumber);
    dor_cmd->add_flag("--recurrence", dor.recurrence, "Recurrence coefficients from determinants (d = 2)");
    add_format(dor_cmd, dor.fmt);

    CfracOpts cfo;
    auto *cf_cmd = app.add_subcommand("cfrac", "d-fraction from a production matrix and its expansion");
    cf_cmd->add_option("--input", cfo.input, "JSON file with a production matrix or d-fraction bands");
    cfo.spec.add_to(cf_cmd);
    cf_cmd->add_option("--d", cfo.d, "Band width (default: orthogonality order)");
    cf_cmd->add_option("--terms", cfo.terms, "Coefficients to expand")->check(CLI::PositiveNumber);
    cf_cmd->add_option("--levels", cfo.levels, "Levels used in the expansion");
    add_format(cf_cmd, cfo.fmt);

    std::string verify_id;
    Format verify_fmt{"pretty"};
    auto *ver_cmd = app.add_subcommand("verify", "Replay a worked example against its golden tables");
    ver_cmd->add_option("id", verify_id, "e1..e5 or all")->required();
    add_format(ver_cmd, verify_fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    try {
        if (*gf_cmd) {
            return cmd_gf(gf);
        }
        if (*ri_cmd) {
            return cmd_riordan(ri);
        }
        if (*dh_cmd) {
            return cmd_dhankel(dh);
        }
        if (*dor_cmd) {
            return cmd_dorth(dor);
        }
        if (*cf_cmd) {
            return cmd_cfrac(cfo);
        }
        return cmd_verify(verify_id, verify_fmt);
    } catch (const parse_error &e) {
        std::cerr << "rdh: parse error " << e.what() << '\n';
        return bad_input;
    } catch (const input_error &e) {
        std::cerr << "rdh: " << e.what() << '\n';
        return bad_input;
    } catch (const precondition_error &e) {
        std::cerr << "rdh: " << e.what() << '\n';
        return precondition;
    } catch (const insufficient_data_error &e) {
        std::cerr << "rdh: insufficient data: " << e.what() << '\n';
        return insufficient;
    }
}
