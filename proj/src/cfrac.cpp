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
#include <rdh/errors.hpp>

#include <algorithm>
#include <string>
#include <utility>

namespace rdh
{

DFraction::DFraction(std::size_t d, std::vector<std::vector<Rational>> bands) : m_d(d), m_bands(std::move(bands))
{
    if (m_bands.size() != d + 1) {
        throw input_error("a " + std::to_string(d) + "-fraction needs " + std::to_string(d + 1) + " bands, got "
                          + std::to_string(m_bands.size()));
    }
}

std::size_t DFraction::depth() const
{
    std::size_t depth = m_bands.front().size();
    for (const auto &b : m_bands) {
        depth = std::min(depth, b.size());
    }
    return depth;
}

DFraction from_production(const ProductionMatrix &P, std::size_t d)
{
    for (std::size_t n = 0; n < P.size(); ++n) {
        for (std::size_t k = 0; k + d < n; ++k) {
            if (!P.at(n, k).is_zero()) {
                throw precondition_error("production matrix is wider than " + std::to_string(d + 2)
                                         + " diagonals: p(" + std::to_string(n) + "," + std::to_string(k)
                                         + ") = " + P.at(n, k).to_string());
            }
        }
    }
    std::vector<std::vector<Rational>> bands(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t k = 0; k + j < P.size(); ++k) {
            bands[j].push_back(P.at(k + j, k));
        }
    }
    return DFraction(d, std::move(bands));
}

Series expand(const DFraction &cf, std::size_t order, std::optional<std::size_t> levels)
{
    if (order == 0) {
        throw precondition_error("expansion order must be at least 1");
    }
    const auto d = cf.d();
    const auto K = levels.value_or(cf.depth());
    if (K > cf.depth() || K < order + d) {
        throw insufficient_data_error("expanding " + std::to_string(order) + " terms of a " + std::to_string(d)
                                      + "-fraction needs " + std::to_string(order + d)
                                      + " levels, have " + std::to_string(std::min(K, cf.depth())));
    }
    const auto one = Series::constant(1, order);
    // G[i] holds G_{k+1+i} while level k is being built; levels at or below
    // the base are 1.
    std::vector<Series> below(d, one);
    for (std::size_t k = K; k-- > 0;) {
        auto denom = one;
        auto prod = one;
        auto xp = Series::x(order);
        for (std::size_t j = 0; j <= d; ++j) {
            if (j > 0) {
                prod = prod * below[j - 1];
                xp = mul_x(xp);
            }
            const auto &c = cf.bands()[j][k];
            if (!c.is_zero()) {
                denom = denom - scale(xp * prod, c);
            }
        }
        auto level = reciprocal(denom);
        if (d > 0) {
            below.pop_back();
            below.insert(below.begin(), std::move(level));
        } else {
            below.assign(1, std::move(level));
        }
    }
    return below.front();
}

} // namespace rdh
