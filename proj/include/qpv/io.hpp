// Copyright 2026 The qpv authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>
#include <string>

#include "qpv/config.hpp"
#include "qpv/fixtures.hpp"
#include "qpv/program.hpp"

namespace qpv {

using Json = nlohmann::ordered_json;

// Program files are JSON documents:
//
//   {
//     "dimension": d,
//     "processes": [ {"name": "...", "kraus": [matrix, ...]}, ... ],
//     "measurement": {"m0": matrix, "m1": matrix},
//     "initial_state": {"pure": vector} | {"density": matrix}
//   }
//
// where a complex scalar is a two-element [re, im] array, a vector is an
// array of complex scalars, and a matrix is a row-major array of rows.

/// Parses and validates. Throws ParseError (malformed text or structure,
/// annotated with the position or field), ValidationError (a well-formed
/// program whose measurement or channels violate the model constraints), or
/// DimensionMismatch.
ProgramInstance parse_program(const std::string& path, const Tolerances& tol = Tolerances{});

/// Same, from an in-memory document ("<memory>" used as the position label).
ProgramInstance parse_program_text(const std::string& text, const Tolerances& tol = Tolerances{});

Json serialize_program(const ProgramInstance& instance);

void write_program(const ProgramInstance& instance, const std::string& path);

// JSON encoding helpers shared with the report builders.
Json json_complex(const Complex& z);
Json json_vector(const ComplexVector& v);
Json json_matrix(const ComplexMatrix& m);

}  // namespace qpv
