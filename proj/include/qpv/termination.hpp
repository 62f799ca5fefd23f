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

#include <optional>
#include <vector>

#include "qpv/config.hpp"
#include "qpv/program.hpp"

namespace qpv {

enum class ScheduleKind { all, fair };

const char* schedule_name(ScheduleKind kind);

/// Outcome of a termination decision. The program terminates (with
/// certainty) iff the relevant operator power annihilates the initial state.
/// Annihilation at power d forces an exact one-step collapse at some step
/// j <= d, so the decision is made per step, scale-free: residual_norm is
/// the smallest one-step survival ratio observed (relative to the operator's
/// norm), and terminates <=> residual_norm <= zero tolerance.
struct TerminationVerdict {
    bool terminates = false;
    ScheduleKind schedule = ScheduleKind::all;
    double residual_norm = 0.0;
    /// Within a factor of 10 of the zero threshold on either side.
    bool numerically_marginal = false;
    /// Best-effort non-termination witness: a length-d path whose final
    /// partial state is nonzero. Advisory only; the verdict stands without it.
    std::optional<PathString> witness;
};

/// The permutation-indexed matrices behind the fair-schedule decision:
/// g_poly = sum_{i<d} N^i for N the matrix representation of the step sum,
/// one product N_{s_m} G ... G N_{s_1} per permutation s of the labels, and
/// their total.
struct PermutationMachinery {
    std::vector<std::vector<int>> permutations;  // lexicographic order
    MatrixRep g_poly;
    std::vector<MatrixRep> per_perm;
    MatrixRep total;
};

/// Default cap on the factorial blow-up of the fair-schedule machinery.
inline constexpr int kDefaultMaxProcesses = 8;

/// Termination under every schedule: decided by whether the d-th power of
/// the step sum annihilates rho0.
TerminationVerdict terminates_all(const Program& p, const ComplexMatrix& rho0,
                                  const Tolerances& tol = Tolerances{});

PermutationMachinery build_permutation_machinery(const Program& p,
                                                 const Tolerances& tol = Tolerances{},
                                                 int max_processes = kDefaultMaxProcesses);

/// Termination under every fair schedule: decided by whether the d-th power
/// of the permutation total annihilates rho0.
TerminationVerdict terminates_fair(const Program& p, const ComplexMatrix& rho0,
                                   const Tolerances& tol = Tolerances{},
                                   int max_processes = kDefaultMaxProcesses);

/// Diagnostic: the relative residual of the state driven along the
/// round-robin prefix (1 2 ... m)^d. A fair-terminating program must drive
/// this residual below the zero tolerance, since that prefix concatenates d
/// fair pieces.
struct FairPrefixReport {
    PathString path;
    double residual_norm = 0.0;
    bool terminated_along_prefix = false;
};

FairPrefixReport fair_prefix_check(const Program& p, const ComplexMatrix& rho0,
                                   const Tolerances& tol = Tolerances{});

}  // namespace qpv
