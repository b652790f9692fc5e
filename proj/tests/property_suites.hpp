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


#ifndef RDH_TESTS_PROPERTY_SUITES_HPP
#define RDH_TESTS_PROPERTY_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace props
{

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool pass() const
    {
        return failures == 0 && cases >= 100;
    }
};

// Each suite runs `cases` randomized checks from a fixed seed.
SuiteResult reversion_round_trip(std::uint64_t seed, std::size_t cases = 100);
SuiteResult inverse_involution(std::uint64_t seed, std::size_t cases = 100);
SuiteResult production_routes_agree(std::uint64_t seed, std::size_t cases = 100);
SuiteResult generate_reproduces_triangle(std::uint64_t seed, std::size_t cases = 100);
SuiteResult za_round_trip(std::uint64_t seed, std::size_t cases = 100);
SuiteResult classical_hankel(std::uint64_t seed, std::size_t cases = 100);
SuiteResult bareiss_vs_gauss(std::uint64_t seed, std::size_t cases = 100);
SuiteResult cfrac_vs_generation(std::uint64_t seed, std::size_t cases = 100);

std::vector<SuiteResult> run_all(std::uint64_t seed);

} // namespace props

#endif
