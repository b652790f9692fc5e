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

#ifndef RDH_DORTH_HPP
#define RDH_DORTH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <rdh/polynomial.hpp>
#include <rdh/riordan.hpp>
#include <rdh/sequence_family.hpp>

namespace rdh
{

// Monic family P_0..P_{N-1}, deg P_n = n.
struct PolyFamily {
    std::vector<Polynomial> polys;
    std::size_t d = 0; // 0 when unknown

    friend bool operator==(const PolyFamily &a, const PolyFamily &b)
    {
        return a.polys == b.polys;
    }
};

// Diagonals of a production matrix: alpha[n] = p(n,n) and
// bands[j-1][n] = p(n+j, n) for j = 1..d.
struct RecurrenceBands {
    std::size_t d = 0;
    std::vector<Rational> alpha;
    std::vector<std::vector<Rational>> bands;

    friend bool operator==(const RecurrenceBands &, const RecurrenceBands &) = default;
};

// P_0 = 1, P_{n+1} = x P_n - sum_{k<=n} p(n,k) P_k for n + 1 < count.
// Requires p(n,n+1) = 1 on every row used.
PolyFamily polys_from_production(const ProductionMatrix &P, std::size_t count);

// P_n = h_n(x) / h_{n-1} with P_0 = 1. Throws precondition_error when some
// h_{n-1} vanishes.
PolyFamily polys_from_determinants(const SequenceFamily &F, std::size_t count);

// Row n holds the coefficients of P_n, ascending powers.
TriangleSlice coefficient_triangle(const PolyFamily &PF);

// Reads alpha, p(n+1,n), p(n+2,n) for a 2-orthogonal family straight from
// Hankel determinants, with h_{n,k} the minor of h_n(x) at x^k. Returns
// `count` alpha values and correspondingly shorter bands. F.d() must be 2.
RecurrenceBands recurrence_from_determinants(const SequenceFamily &F, std::size_t count);

// alpha and the first d subdiagonals of a production matrix.
RecurrenceBands bands_from_production(const ProductionMatrix &P, std::size_t d);

// Smallest d with p(n,k) = 0 whenever n - k > d over the whole slice, or
// nullopt when the slice is not banded (the lowest nonzero subdiagonal
// reaches the last row of the slice, so no bound is visible).
std::optional<std::size_t> orthogonality_order(const ProductionMatrix &P);

} // namespace rdh

#endif
