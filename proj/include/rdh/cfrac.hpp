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

#ifndef RDH_CFRAC_HPP
#define RDH_CFRAC_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <rdh/rational.hpp>
#include <rdh/riordan.hpp>
#include <rdh/series.hpp>

namespace rdh
{

// Generalized continued fraction with levels
//
//   G_k = 1 / (1 - sum_{j=0}^{d} c(j,k) x^{j+1} G_{k+1} ... G_{k+j})
//
// For d = 1 this is the Jacobi fraction 1/(1 - a_0 x - b_0 x^2/(1 - ...)).
class DFraction
{
public:
    // bands[j][k] = c(j,k); needs exactly d + 1 bands.
    DFraction(std::size_t d, std::vector<std::vector<Rational>> bands);

    std::size_t d() const
    {
        return m_d;
    }
    const std::vector<std::vector<Rational>> &bands() const
    {
        return m_bands;
    }
    // Number of levels k for which every c(j,k) is known.
    std::size_t depth() const;

    friend bool operator==(const DFraction &, const DFraction &) = default;

private:
    std::size_t m_d;
    std::vector<std::vector<Rational>> m_bands;
};

// c(j,k) = p(k+j, k). Throws precondition_error if P has a nonzero entry
// more than d below the diagonal.
DFraction from_production(const ProductionMatrix &P, std::size_t d);

// First `order` coefficients of G_0, evaluated bottom-up from G_levels = 1.
// levels defaults to depth(); it must be at least order + d.
Series expand(const DFraction &cf, std::size_t order, std::optional<std::size_t> levels = {});

} // namespace rdh

#endif
