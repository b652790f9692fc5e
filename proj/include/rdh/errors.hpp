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

#ifndef RDH_ERRORS_HPP
#define RDH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdh
{

// Base of every error thrown by the library. The CLI maps the concrete
// subclasses onto its exit codes.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Malformed user input: expression syntax, JSON payloads, rational literals.
class input_error : public error
{
public:
    using error::error;
};

// A mathematical precondition does not hold (zero divisor constant term,
// kind mismatch, non-invertible f, vanishing determinant denominator...).
class precondition_error : public error
{
public:
    using error::error;
};

// Not enough terms or rows are available to compute the request.
class insufficient_data_error : public error
{
public:
    using error::error;
};

// Coefficient requested beyond the truncation order of a series.
class truncation_error : public insufficient_data_error
{
public:
    using insufficient_data_error::insufficient_data_error;
};

enum class parse_error_kind { unbalanced_paren, unknown_identifier, malformed_number, trailing_input, unexpected_token };

const char *to_string(parse_error_kind) noexcept;

class parse_error : public input_error
{
public:
    parse_error(parse_error_kind kind, std::size_t offset, const std::string &what);

    parse_error_kind kind() const noexcept
    {
        return m_kind;
    }
    // Byte offset into the parsed text.
    std::size_t offset() const noexcept
    {
        return m_offset;
    }

private:
    parse_error_kind m_kind;
    std::size_t m_offset;
};

} // namespace rdh

#endif
