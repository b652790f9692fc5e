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

#ifndef RDH_SEQUENCE_FAMILY_HPP
#define RDH_SEQUENCE_FAMILY_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <rdh/errors.hpp>
#include <rdh/rational.hpp>

namespace rdh
{

// d parallel sequences a_{n,0}, ..., a_{n,d-1} feeding a d-Hankel
// determinant. Sequences may have different lengths; length() is the
// common prefix available in all of them.
class SequenceFamily
{
public:
    explicit SequenceFamily(std::vector<std::vector<Rational>> sequences) : m_seqs(std::move(sequences))
    {
        if (m_seqs.empty()) {
            throw input_error("a sequence family needs d >= 1 sequences");
        }
    }

    std::size_t d() const
    {
        return m_seqs.size();
    }
    std::span<const Rational> sequence(std::size_t r) const
    {
        return m_seqs.at(r);
    }
    const std::vector<std::vector<Rational>> &sequences() const
    {
        return m_seqs;
    }
    std::size_t length() const
    {
        std::size_t l = m_seqs.front().size();
        for (const auto &s : m_seqs) {
            l = std::min(l, s.size());
        }
        return l;
    }

    friend bool operator==(const SequenceFamily &, const SequenceFamily &) = default;

private:
    std::vector<std::vector<Rational>> m_seqs;
};

} // namespace rdh

#endif
