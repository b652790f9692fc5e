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

#ifndef RDH_MATRIX_HPP
#define RDH_MATRIX_HPP

#include <cassert>
#include <cstddef>
#include <vector>

#include <rdh/rational.hpp>

namespace rdh
{

// Dense row-major matrix of rationals.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1;
        }
        return m;
    }

    std::size_t rows() const
    {
        return m_rows;
    }
    std::size_t cols() const
    {
        return m_cols;
    }

    Rational &operator()(std::size_t i, std::size_t j)
    {
        assert(i < m_rows && j < m_cols);
        return m_data[i * m_cols + j];
    }
    const Rational &operator()(std::size_t i, std::size_t j) const
    {
        assert(i < m_rows && j < m_cols);
        return m_data[i * m_cols + j];
    }

    friend bool operator==(const Matrix &, const Matrix &) = default;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Rational> m_data;
};

Matrix operator*(const Matrix &a, const Matrix &b);

} // namespace rdh

#endif
