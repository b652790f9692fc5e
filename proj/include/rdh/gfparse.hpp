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

#ifndef RDH_GFPARSE_HPP
#define RDH_GFPARSE_HPP

// Generating function expressions, e.g. "1/sqrt(1-2*x)" or "(1+x)^-2".
//
//   expr     := term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor)*
//   factor   := ['-'] atom ['^' ['-'] int]
//   atom     := rational | 'x' | '(' expr ')' | func '(' expr ')'
//   func     := 'sqrt' | 'exp' | 'log'
//   rational := int ['/' int]
//
// '^' binds tighter than unary minus, so "-x^2" is -(x^2). A literal
// "p/q" is read as one rational unless it directly follows a '/', which
// keeps "x/2/3" equal to (x/2)/3. Implicit multiplication is rejected.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include <rdh/errors.hpp>
#include <rdh/rational.hpp>
#include <rdh/series.hpp>

namespace rdh
{

enum class gf_op { number, var, neg, add, sub, mul, div, pow, sqrt, exp, log };

// Immutable expression tree. Children are shared, so copies are cheap.
struct GfExpr {
    gf_op op = gf_op::number;
    Rational value;    // number literal
    long exponent = 0; // pow
    std::shared_ptr<const GfExpr> lhs, rhs;
    std::size_t offset = 0; // byte offset of the node in the source text

    static GfExpr number(Rational v, std::size_t offset = 0);
    static GfExpr var(std::size_t offset = 0);
    static GfExpr unary(gf_op op, GfExpr arg, std::size_t offset = 0);
    static GfExpr binary(gf_op op, GfExpr a, GfExpr b, std::size_t offset = 0);
    static GfExpr power(GfExpr base, long exponent, std::size_t offset = 0);
};

// Structural equality, ignoring offsets.
bool same_tree(const GfExpr &a, const GfExpr &b);

// Throws parse_error carrying the byte offset of the problem.
GfExpr parse_gf(std::string_view text);

// Canonical text form; parse_gf(print_gf(e)) evaluates identically to e.
std::string print_gf(const GfExpr &e);
// Prefix form used in diagnostics and tests: div(1,sqrt(sub(1,mul(2,x)))).
std::string dump_gf(const GfExpr &e);

// Raised when a series precondition fails during evaluation. Names the
// offending subexpression.
class eval_error : public precondition_error
{
public:
    eval_error(const std::string &subexpr, std::size_t offset, const std::string &reason);

    const std::string &subexpression() const noexcept
    {
        return m_subexpr;
    }
    std::size_t offset() const noexcept
    {
        return m_offset;
    }

private:
    std::string m_subexpr;
    std::size_t m_offset;
};

Series eval_gf(const GfExpr &e, std::size_t order, series_kind kind);
// parse_gf followed by eval_gf.
Series eval_gf(std::string_view text, std::size_t order, series_kind kind);

} // namespace rdh

#endif
