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

#include <rdh/gfparse.hpp>

#include <cctype>
#include <limits>
#include <utility>

namespace rdh
{

GfExpr GfExpr::number(Rational v, std::size_t offset)
{
    GfExpr e;
    e.op = gf_op::number;
    e.value = std::move(v);
    e.offset = offset;
    return e;
}

GfExpr GfExpr::var(std::size_t offset)
{
    GfExpr e;
    e.op = gf_op::var;
    e.offset = offset;
    return e;
}

GfExpr GfExpr::unary(gf_op op, GfExpr arg, std::size_t offset)
{
    GfExpr e;
    e.op = op;
    e.lhs = std::make_shared<const GfExpr>(std::move(arg));
    e.offset = offset;
    return e;
}

GfExpr GfExpr::binary(gf_op op, GfExpr a, GfExpr b, std::size_t offset)
{
    GfExpr e;
    e.op = op;
    e.lhs = std::make_shared<const GfExpr>(std::move(a));
    e.rhs = std::make_shared<const GfExpr>(std::move(b));
    e.offset = offset;
    return e;
}

GfExpr GfExpr::power(GfExpr base, long exponent, std::size_t offset)
{
    auto e = unary(gf_op::pow, std::move(base), offset);
    e.exponent = exponent;
    return e;
}

bool same_tree(const GfExpr &a, const GfExpr &b)
{
    if (a.op != b.op) {
        return false;
    }
    switch (a.op) {
        case gf_op::number:
            return a.value == b.value;
        case gf_op::var:
            return true;
        case gf_op::pow:
            return a.exponent == b.exponent && same_tree(*a.lhs, *b.lhs);
        case gf_op::neg:
        case gf_op::sqrt:
        case gf_op::exp:
        case gf_op::log:
            return same_tree(*a.lhs, *b.lhs);
        default:
            return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
    }
}

namespace
{

class parser
{
public:
    explicit parser(std::string_view text) : m_text(text) {}

    GfExpr run()
    {
        auto e = expr();
        skip_ws();
        if (m_pos < m_text.size()) {
            const char c = m_text[m_pos];
            if (c == ')') {
                fail(parse_error_kind::unbalanced_paren, "unmatched ')'");
            }
            if (std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '(') {
                fail(parse_error_kind::trailing_input, "implicit multiplication is not supported, use '*'");
            }
            fail(parse_error_kind::trailing_input, std::string("unexpected '") + c + "'");
        }
        return e;
    }

private:
    [[noreturn]] void fail(parse_error_kind kind, const std::string &what) const
    {
        throw parse_error(kind, m_pos, what);
    }

    void skip_ws()
    {
        while (m_pos < m_text.size() && std::isspace(static_cast<unsigned char>(m_text[m_pos])) != 0) {
            ++m_pos;
        }
    }

    // Consumes c (after whitespace) if present.
    bool accept(char c)
    {
        skip_ws();
        if (m_pos < m_text.size() && m_text[m_pos] == c) {
            ++m_pos;
            return true;
        }
        return false;
    }

    bool at_digit()
    {
        skip_ws();
        return m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos])) != 0;
    }

    integer digits()
    {
        const auto start = m_pos;
        while (m_pos < m_text.size() && std::isdigit(static_cast<unsigned char>(m_text[m_pos])) != 0) {
            ++m_pos;
        }
        if (m_pos < m_text.size() && (m_text[m_pos] == '.' || m_text[m_pos] == 'e' || m_text[m_pos] == 'E')) {
            fail(parse_error_kind::malformed_number, "only integer and p/q literals are supported");
        }
        return integer(std::string(m_text.substr(start, m_pos - start)), 10);
    }

    GfExpr expr()
    {
        auto lhs = term();
        while (true) {
            skip_ws();
            const auto at = m_pos;
            if (accept('+')) {
                lhs = GfExpr::binary(gf_op::add, std::move(lhs), term(), at);
            } else if (accept('-')) {
                lhs = GfExpr::binary(gf_op::sub, std::move(lhs), term(), at);
            } else {
                return lhs;
            }
        }
    }

    GfExpr term()
    {
        auto lhs = factor(false);
        while (true) {
            skip_ws();
            const auto at = m_pos;
            if (accept('*')) {
                lhs = GfExpr::binary(gf_op::mul, std::move(lhs), factor(false), at);
            } else if (accept('/')) {
                lhs = GfExpr::binary(gf_op::div, std::move(lhs), factor(true), at);
            } else {
                return lhs;
            }
        }
    }

    GfExpr factor(bool after_slash)
    {
        skip_ws();
        const auto at = m_pos;
        const bool negate = accept('-');
        auto base = atom(after_slash);
        skip_ws();
        const auto pow_at = m_pos;
        if (accept('^')) {
            const bool neg_exp = accept('-');
            if (!at_digit()) {
                fail(parse_error_kind::malformed_number, "'^' must be followed by an integer literal");
            }
            const auto mag = digits();
            if (mag > std::numeric_limits<long>::max()) {
                fail(parse_error_kind::malformed_number, "exponent out of range");
            }
            const long e = mag.get_si();
            base = GfExpr::power(std::move(base), neg_exp ? -e : e, pow_at);
        }
        return negate ? GfExpr::unary(gf_op::neg, std::move(base), at) : base;
    }

    GfExpr atom(bool after_slash)
    {
        skip_ws();
        const auto at = m_pos;
        if (m_pos >= m_text.size()) {
            fail(parse_error_kind::unexpected_token, "unexpected end of input");
        }
        const char c = m_text[m_pos];
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            return number(after_slash);
        }
        if (c == '(') {
            ++m_pos;
            auto inner = expr();
            if (!accept(')')) {
                fail(parse_error_kind::unbalanced_paren, "expected ')' to close '(' at offset " + std::to_string(at));
            }
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
            while (m_pos < m_text.size() && std::isalnum(static_cast<unsigned char>(m_text[m_pos])) != 0) {
                ++m_pos;
            }
            const auto name = m_text.substr(at, m_pos - at);
            if (name == "x") {
                return GfExpr::var(at);
            }
            gf_op op;
            if (name == "sqrt") {
                op = gf_op::sqrt;
            } else if (name == "exp") {
                op = gf_op::exp;
            } else if (name == "log") {
                op = gf_op::log;
            } else {
                m_pos = at;
                fail(parse_error_kind::unknown_identifier, "'" + std::string(name) + "'");
            }
            if (!accept('(')) {
                fail(parse_error_kind::unexpected_token, "expected '(' after " + std::string(name));
            }
            auto arg = expr();
            if (!accept(')')) {
                fail(parse_error_kind::unbalanced_paren, "expected ')' to close " + std::string(name) + "(");
            }
            return GfExpr::unary(op, std::move(arg), at);
        }
        if (c == ')') {
            fail(parse_error_kind::unbalanced_paren, "unmatched ')'");
        }
        fail(parse_error_kind::unexpected_token, std::string("unexpected '") + c + "'");
    }

    GfExpr number(bool after_slash)
    {
        const auto at = m_pos;
        const auto num = digits();
        if (!after_slash) {
            // Absorb "/q" into the literal only when a digit follows.
            const auto save = m_pos;
            if (accept('/') && at_digit()) {
                const auto den_at = m_pos;
                const auto den = digits();
                if (den == 0) {
                    m_pos = den_at;
                    fail(parse_error_kind::malformed_number, "zero denominator");
                }
                return GfExpr::number(Rational(num, den), at);
            }
            m_pos = save;
        }
        return GfExpr::number(Rational(num), at);
    }

    std::string_view m_text;
    std::size_t m_pos = 0;
};

// Binding strength of the grammar level a node prints at.
int level(const GfExpr &e)
{
    switch (e.op) {
        case gf_op::add:
        case gf_op::sub:
            return 1;
        case gf_op::mul:
        case gf_op::div:
            return 2;
        case gf_op::neg:
            return 3;
        case gf_op::pow:
            return 4;
        case gf_op::number:
            return e.value.is_integer() && e.value.sign() >= 0 ? 5 : 0;
        default:
            return 5;
    }
}

std::string print_at(const GfExpr &e, int min_level);

std::string print_bare(const GfExpr &e)
{
    switch (e.op) {
        case gf_op::number:
            return e.value.to_string();
        case gf_op::var:
            return "x";
        case gf_op::neg:
            return "-" + print_at(*e.lhs, 4);
        case gf_op::add:
            return print_at(*e.lhs, 1) + "+" + print_at(*e.rhs, 2);
        case gf_op::sub:
            return print_at(*e.lhs, 1) + "-" + print_at(*e.rhs, 2);
        case gf_op::mul:
            return print_at(*e.lhs, 2) + "*" + print_at(*e.rhs, 3);
        case gf_op::div:
            return print_at(*e.lhs, 2) + "/" + print_at(*e.rhs, 3);
        case gf_op::pow:
            return print_at(*e.lhs, 5) + "^" + std::to_string(e.exponent);
        case gf_op::sqrt:
            return "sqrt(" + print_at(*e.lhs, 1) + ")";
        case gf_op::exp:
            return "exp(" + print_at(*e.lhs, 1) + ")";
        case gf_op::log:
            return "log(" + print_at(*e.lhs, 1) + ")";
    }
    return {};
}

std::string print_at(const GfExpr &e, int min_level)
{
    auto s = print_bare(e);
    return level(e) < min_level ? "(" + s + ")" : s;
}

} // namespace

GfExpr parse_gf(std::string_view text)
{
    return parser(text).run();
}

std::string print_gf(const GfExpr &e)
{
    return print_at(e, 1);
}

std::string dump_gf(const GfExpr &e)
{
    switch (e.op) {
        case gf_op::number:
            return e.value.to_string();
        case gf_op::var:
            return "x";
        case gf_op::neg:
            return "neg(" + dump_gf(*e.lhs) + ")";
        case gf_op::add:
            return "add(" + dump_gf(*e.lhs) + "," + dump_gf(*e.rhs) + ")";
        case gf_op::sub:
            return "sub(" + dump_gf(*e.lhs) + "," + dump_gf(*e.rhs) + ")";
        case gf_op::mul:
            return "mul(" + dump_gf(*e.lhs) + "," + dump_gf(*e.rhs) + ")";
        case gf_op::div:
            return "div(" + dump_gf(*e.lhs) + "," + dump_gf(*e.rhs) + ")";
        case gf_op::pow:
            return "pow(" + dump_gf(*e.lhs) + "," + std::to_string(e.exponent) + ")";
        case gf_op::sqrt:
            return "sqrt(" + dump_gf(*e.lhs) + ")";
        case gf_op::exp:
            return "exp(" + dump_gf(*e.lhs) + ")";
        case gf_op::log:
            return "log(" + dump_gf(*e.lhs) + ")";
    }
    return {};
}

eval_error::eval_error(const std::string &subexpr, std::size_t offset, const std::string &reason)
    : precondition_error("cannot evaluate '" + subexpr + "' (offset " + std::to_string(offset) + "): " + reason),
      m_subexpr(subexpr), m_offset(offset)
{
}

namespace
{

Series eval_node(const GfExpr &e, std::size_t order, series_kind kind)
{
    switch (e.op) {
        case gf_op::number:
            return Series::constant(e.value, order, kind);
        case gf_op::var:
            return Series::x(order, kind);
        default:
            break;
    }
    const auto a = eval_node(*e.lhs, order, kind);
    try {
        switch (e.op) {
            case gf_op::neg:
                return -a;
            case gf_op::add:
                return a + eval_node(*e.rhs, order, kind);
            case gf_op::sub:
                return a - eval_node(*e.rhs, order, kind);
            case gf_op::mul:
                return a * eval_node(*e.rhs, order, kind);
            case gf_op::div:
                return a / eval_node(*e.rhs, order, kind);
            case gf_op::pow:
                return pow_int(a, e.exponent);
            case gf_op::sqrt:
                return sqrt_series(a);
            case gf_op::exp:
                return exp_series(a);
            case gf_op::log:
                return log_series(a);
            default:
                break;
        }
    } catch (const eval_error &) {
        throw;
    } catch (const precondition_error &ex) {
        throw eval_error(print_gf(e), e.offset, ex.what());
    }
    return a;
}

} // namespace

Series eval_gf(const GfExpr &e, std::size_t order, series_kind kind)
{
    if (order == 0) {
        throw precondition_error("series order must be at least 1");
    }
    return eval_node(e, order, kind);
}

Series eval_gf(std::string_view text, std::size_t order, series_kind kind)
{
    return eval_gf(parse_gf(text), order, kind);
}

} // namespace rdh
