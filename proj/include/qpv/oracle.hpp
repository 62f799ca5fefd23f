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

#include <cstddef>
#include <vector>

#include "qpv/config.hpp"
#include "qpv/program.hpp"
#include "qpv/subspace.hpp"

namespace qpv {

/// Caps that keep explicit path enumeration to fractions of a second. The
/// oracles exist to certify the closed-form algorithms at small scale, not
/// to compete with them.
struct EnumerationBudget {
    std::size_t max_path_len = 8;     // 2 * max_d
    int max_m = 3;
    Index max_d = 4;
    std::size_t max_pi_size = 100000;  // expansions counted before dedup
};

/// Join of supp(F_f(rho0)) over every path f with min_len <= |f| <= max_len.
/// Branches whose trace falls below the zero tolerance are pruned: a dead
/// branch stays dead under every continuation.
Subspace bruteforce_reach_window(const Program& p, const ComplexMatrix& rho0,
                                 std::size_t min_len, std::size_t max_len,
                                 const EnumerationBudget& budget = EnumerationBudget{},
                                 const Tolerances& tol = Tolerances{});

/// Reachable space by enumeration: window [0, d-1].
Subspace bruteforce_reach(const Program& p, const ComplexMatrix& rho0,
                          const EnumerationBudget& budget = EnumerationBudget{},
                          const Tolerances& tol = Tolerances{});

/// Uniformly repeatedly reachable space by enumeration: window [d, 2d-1].
Subspace bruteforce_urr(const Program& p, const ComplexMatrix& rho0,
                        const EnumerationBudget& budget = EnumerationBudget{},
                        const Tolerances& tol = Tolerances{});

/// True iff every path of length d annihilates rho0.
bool bruteforce_terminates_all(const Program& p, const ComplexMatrix& rho0,
                               const EnumerationBudget& budget = EnumerationBudget{},
                               const Tolerances& tol = Tolerances{});

/// The fair pieces built from process permutations with fillers shorter than
/// d between consecutive permutation entries: every word
/// s_1 f_1 s_2 f_2 ... f_{m-1} s_m with s a permutation of {1..m} and each
/// f_i in K^{<d}. Deduplicated and lexicographically sorted.
std::vector<PathString> enumerate_pi(int m, Index d,
                                     const EnumerationBudget& budget = EnumerationBudget{});

/// Number of (permutation, filler) expansions before deduplication:
/// m! * (sum_{j<d} m^j)^(m-1). Used for the budget check.
std::size_t pi_expansion_count(int m, Index d);

/// True iff the d-th application of sum_{f in Pi} F_f annihilates rho0,
/// with the sum built by direct Kraus-level composition per enumerated path.
bool bruteforce_terminates_fair(const Program& p, const ComplexMatrix& rho0,
                                const EnumerationBudget& budget = EnumerationBudget{},
                                const Tolerances& tol = Tolerances{});

}  // namespace qpv
