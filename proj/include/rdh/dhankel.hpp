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

#ifndef RDH_DHANKEL_HPP
#define RDH_DHANKEL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <rdh/matrix.hpp>
#include <rdh/polynomial.hpp>
#include <rdh/rational.hpp>
#include <rdh/sequence_family.hpp>

namespace rdh
{

/// Fraction-free Bareiss elimination. Each row is first scaled by the lcm
/// of its denominators so the elimination runs over the integers.
Rational det_bareiss(const Matrix &M);
/// Plain Gaussian elimination over the rationals with row pivoting.
Rational det_gauss(const Matrix &M);
/// The library's determinant; Bareiss.
Rational det_exact(const Matrix &M);

/// Sequence length needed by row i of the (n+1)x(n+1) d-Hankel matrix.
std::size_t dhankel_required_length(std::size_t d, std::size_t n);

/// M[i][j] = S_{i mod d}[floor(i/d) + j], 0 <= i,j <= n. For d = 1 this is
/// the classical Hankel matrix (a_{i+j}). Throws insufficient_data_error
/// naming the needed length if a sequence is too short.
Matrix dhankel_matrix(const SequenceFamily &F, std::size_t n);

/// Determinant of dhankel_matrix(F, n).
Rational dhankel(const SequenceFamily &F, std::size_t n);
/// h_0..h_n.
std::vector<Rational> dhankel_transform(const SequenceFamily &F, std::size_t n);

/// dhankel_matrix(F, n) with its last row replaced by (1, x, ..., x^n),
/// expanded along that row. The coefficient of x^k is the signed cofactor
/// (-1)^(n+k) * minor(n, k).
Polynomial dhankel_poly(const SequenceFamily &F, std::size_t n);

/// Unsigned minor of dhankel_matrix(F, n) with row n and column k deleted;
/// the coefficient of x^k in dhankel_poly is (-1)^(n+k) times this.
Rational dhankel_minor(const SequenceFamily &F, std::size_t n, std::size_t k);

/// prod_{k=0}^{n} gamma_k^floor((n-k)/d).
Rational product_formula(std::span<const Rational> gamma, std::size_t d, std::size_t n);

} // namespace rdh

#endif
