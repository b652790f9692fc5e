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

#ifndef RDH_JSON_IO_HPP
#define RDH_JSON_IO_HPP

// JSON and CSV encodings. Rationals are always strings, "n" or "p/q";
// matrices are arrays of row arrays (ragged for triangles and production
// matrices).
//
//   SequenceFamily  {"d": 2, "sequences": [["1","1","3"], ["1","2","8"]]}
//   HankelResult    {"h": ["1","1","2"]}
//   DFraction       {"d": 2, "bands": [[c00, c01, ...], [c10, ...], ...]}
//   PolyFamily      [["1"], ["-1","1"], ...]   (ascending powers)
//
// Readers ignore unknown keys, so a document carrying several of these
// (as the CLI emits) can be fed to any reader that finds its keys.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include <rdh/cfrac.hpp>
#include <rdh/dorth.hpp>
#include <rdh/rational.hpp>
#include <rdh/riordan.hpp>
#include <rdh/sequence_family.hpp>
#include <rdh/series.hpp>

namespace rdh
{

using json = nlohmann::ordered_json;

json to_json(const Rational &r);
json to_json(std::span<const Rational> v);
json to_json(const std::vector<std::vector<Rational>> &rows);
json to_json(const Series &s);
json to_json(const TriangleSlice &t);
json to_json(const ProductionMatrix &p);
json to_json(const SequenceFamily &f);
json to_json(const PolyFamily &pf);
json to_json(const DFraction &cf);
json to_json(const RecurrenceBands &rb);
json hankel_to_json(std::span<const Rational> h);

// Readers throw input_error on malformed documents.
Rational rational_from_json(const json &j);
std::vector<Rational> rationals_from_json(const json &j);
SequenceFamily family_from_json(const json &j);
// Accepts ragged Hessenberg rows or a square matrix (entries above the
// superdiagonal must be zero), either bare or under a "production" key.
ProductionMatrix production_from_json(const json &j);
TriangleSlice triangle_from_json(const json &j);
PolyFamily polys_from_json(const json &j);
DFraction dfraction_from_json(const json &j);
std::vector<Rational> hankel_from_json(const json &j);

json parse_json(const std::string &text);
json read_json_file(const std::string &path);

// One row per line, comma separated.
std::string to_csv(const std::vector<std::vector<Rational>> &rows);

} // namespace rdh

#endif
