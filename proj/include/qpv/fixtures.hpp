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

#include <string>

#include "qpv/program.hpp"

namespace qpv {

/// A program together with its initial state, as read from a program file.
struct ProgramInstance {
    Program program;
    ComplexMatrix rho0;
    bool rho0_is_pure = false;
    ComplexVector rho0_vector;  // set when rho0_is_pure
};

/// Two interleaved three-site cyclic walks sharing one termination site:
/// each step is a unitary mixing the sites with equal weight, termination
/// is detected at site 2, and the walk starts at site 0.
ProgramInstance example_walk();

/// One process on two sites: flip the site, terminate when site 1 is seen.
/// Dies in exactly two steps from site 0.
ProgramInstance example_flip();

/// One identity process that never terminates; the reachable space is the
/// initial support.
ProgramInstance example_identity();

/// Lookup by name ("walk", "flip", "identity"); throws UnknownProcess on
/// anything else.
ProgramInstance example_by_name(const std::string& name);

}  // namespace qpv
