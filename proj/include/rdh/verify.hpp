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


#ifndef RDH_VERIFY_HPP
#define RDH_VERIFY_HPP

// Replays the worked examples end to end and compares every computed table
// with the embedded golden data (data/golden/<id>.json).

#include <string>
#include <string_view>
#include <vector>

namespace rdh
{

struct CheckResult {
    std::string name;
    std::string origin; // table the expected values were transcribed from
    bool pass = false;
    std::string detail; // first mismatch, empty on success
};

struct ExampleReport {
    std::string id;
    std::string title;
    std::vector<CheckResult> checks;

    bool pass() const
    {
        for (const auto &c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return !checks.empty();
    }
};

// "e1".."e5".
const std::vector<std::string> &example_ids();

// Throws input_error for an unknown id. Library errors raised while
// replaying a check are reported as a failed check, not rethrown.
ExampleReport verify_example(std::string_view id);

namespace detail
{
// Raw golden document, empty for an unknown id.
std::string_view golden_json(std::string_view id);
} // namespace detail

} // namespace rdh

#endif
