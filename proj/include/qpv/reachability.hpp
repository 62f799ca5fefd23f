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

#include <Eigen/LU>

#include "qpv/config.hpp"
#include "qpv/program.hpp"
#include "qpv/subspace.hpp"

namespace qpv {

enum class ReachMethod { algorithm1, iterative, bruteforce };

const char* reach_method_name(ReachMethod method);

/// The reachable space: the join of the supports of every finitely reachable
/// partial state, equal to supp(sum_{i<d} F^i(rho0)) for F the sum of the
/// guarded steps.
struct ReachResult {
    Subspace subspace;
    Index dim = 0;
    ReachMethod method = ReachMethod::algorithm1;
    std::size_t iterations_used = 0;
};

/// The uniformly repeatedly reachable space: states reachable at arbitrarily
/// late times, equal to supp(sum_{i=d}^{2d-1} F^i(rho0)). Always contained
/// in the reachable space.
struct UrrResult {
    Subspace subspace;
    Index dim = 0;
    ReachMethod method = ReachMethod::algorithm1;
    std::size_t iterations_used = 0;
};

/// Closed-form reachable space: solve (I - G/2) x = vec(rho0) for G the
/// matrix representation of the normalized step sum, then orthonormalize the
/// column slices of unvec(x). The system is provably nonsingular (spectral
/// radius of G/2 is at most 1/2).
ReachResult reach_algorithm1(const Program& p, const ComplexMatrix& rho0,
                             const Tolerances& tol = Tolerances{});

/// Monotone-chain form: Y_0 = supp(rho0), Y_{n+1} = supp(rho0 + F(P_{Y_n})),
/// stabilizing after at most d-1 growth steps.
ReachResult reach_iterative(const Program& p, const ComplexMatrix& rho0,
                            const Tolerances& tol = Tolerances{});

/// Closed-form uniformly repeatedly reachable space:
/// slices of G^d (I - G/2)^{-1} vec(rho0), with G^d by repeated squaring.
UrrResult urr_algorithm2(const Program& p, const ComplexMatrix& rho0,
                         const Tolerances& tol = Tolerances{});

/// Shrinking-chain form: Z_0 = reachable space, Z_{n+1} = image(F, Z_n),
/// stabilizing after at most d shrink steps.
UrrResult urr_iterative(const Program& p, const ComplexMatrix& rho0,
                        const Tolerances& tol = Tolerances{});

/// Precomputes the LU factorization of (I - G/2) and the power G^d for one
/// program so that many initial states can be analyzed without repeating the
/// matrix work.
class ReachAnalyzer {
  public:
    explicit ReachAnalyzer(const Program& p, const Tolerances& tol = Tolerances{});

    ReachResult reach(const ComplexMatrix& rho0) const;
    UrrResult urr(const ComplexMatrix& rho0) const;

    Index dim() const { return dim_; }

  private:
    ComplexVector solve(const ComplexVector& rhs) const;

    Index dim_;
    Tolerances tol_;
    ComplexMatrix system_;  // I - G/2
    Eigen::PartialPivLU<ComplexMatrix> lu_;
    ComplexMatrix g_power_d_;  // G^d
};

/// Shared slice-extraction step of the closed-form algorithms: orthonormal
/// basis of the span of the columns of unvec(x), with the drop threshold
/// relative to the largest column norm. When every column sits at or below
/// the zero tolerance times reference_norm (the norm of the vectorized input
/// state), x is rounding noise on a true zero and the result is the zero
/// subspace.
Subspace span_of_unvec_columns(const ComplexVector& x, Index dim, double reference_norm,
                               const Tolerances& tol = Tolerances{});

/// Shape/positivity checks shared by every analysis entry point; the trace
/// may be any positive value (all analyses are scale-invariant).
void require_analyzable_state(const Program& p, const ComplexMatrix& rho0,
                              const Tolerances& tol = Tolerances{});

}  // namespace qpv
