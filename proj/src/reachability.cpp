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

#include "qpv/reachability.hpp"

#include <string>
#include <vector>

#include "qpv/errors.hpp"
#include "qpv/linalg.hpp"

namespace qpv {

const char* reach_method_name(ReachMethod method) {
    switch (method) {
        case ReachMethod::algorithm1: return "algorithm1";
        case ReachMethod::iterative: return "iterative";
        case ReachMethod::bruteforce: return "bruteforce";
    }
    return "unknown";
}

void require_analyzable_state(const Program& p, const ComplexMatrix& rho0,
                              const Tolerances& tol) {
    if (rho0.rows() != p.dim || rho0.cols() != p.dim)
        throw InvalidState("initial state of wrong shape");
    if (!is_positive_semidefinite(rho0, tol))
        throw InvalidState("initial state is not positive-semidefinite");
    if (rho0.real().trace() <= tol.zero)
        throw InvalidState("initial state has no positive trace");
}

Subspace span_of_unvec_columns(const ComplexVector& x, Index dim, double reference_norm,
                               const Tolerances& tol) {
    const ComplexMatrix slices = unvec(x);
    double max_col = 0.0;
    for (Index j = 0; j < dim; ++j) max_col = std::max(max_col, slices.col(j).norm());
    if (max_col <= tol.zero * reference_norm) return Subspace(dim);

    std::vector<ComplexVector> columns;
    columns.reserve(static_cast<std::size_t>(dim));
    for (Index j = 0; j < dim; ++j) columns.push_back(slices.col(j));
    return orthonormalize(dim, columns, tol);
}

ReachAnalyzer::ReachAnalyzer(const Program& p, const Tolerances& tol)
    : dim_(p.dim), tol_(tol) {
    const MatrixRep g = matrix_rep(normalized_superop(p, tol));
    system_ = ComplexMatrix::Identity(g.matrix.rows(), g.matrix.cols()) - 0.5 * g.matrix;
    lu_.compute(system_);
    g_power_d_ = matrix_power(g.matrix, static_cast<unsigned>(dim_));
}

ComplexVector ReachAnalyzer::solve(const ComplexVector& rhs) const {
    ComplexVector x = lu_.solve(rhs);
    // Nonsingularity is a theorem, not an input condition; a bad residual
    // here means the library miscomputed G.
    const double residual = (system_ * x - rhs).norm();
    if (!(residual <= 1e-9 * std::max(1.0, rhs.norm())))
        throw SingularSystem("reach: linear system solve residual " + std::to_string(residual));
    return x;
}

ReachResult ReachAnalyzer::reach(const ComplexMatrix& rho0) const {
    if (rho0.rows() != dim_ || rho0.cols() != dim_)
        throw InvalidState("reach: initial state of wrong shape");
    const Subspace s0 = support(rho0, tol_);
    if (s0.is_full())
        return ReachResult{Subspace::full(dim_), dim_, ReachMethod::algorithm1, 0};
    const ComplexVector b = vec(rho0);
    const ComplexVector x = solve(b);
    Subspace reach = span_of_unvec_columns(x, dim_, b.norm(), tol_);
    const Index d = reach.dim();
    return ReachResult{std::move(reach), d, ReachMethod::algorithm1, 0};
}

UrrResult ReachAnalyzer::urr(const ComplexMatrix& rho0) const {
    if (rho0.rows() != dim_ || rho0.cols() != dim_)
        throw InvalidState("urr: initial state of wrong shape");
    const ComplexVector b = vec(rho0);
    const ComplexVector x = g_power_d_ * solve(b);
    Subspace urr = span_of_unvec_columns(x, dim_, b.norm(), tol_);
    const Index d = urr.dim();
    return UrrResult{std::move(urr), d, ReachMethod::algorithm1, 0};
}

ReachResult reach_algorithm1(const Program& p, const ComplexMatrix& rho0, const Tolerances& tol) {
    require_analyzable_state(p, rho0, tol);
    return ReachAnalyzer(p, tol).reach(rho0);
}

UrrResult urr_algorithm2(const Program& p, const ComplexMatrix& rho0, const Tolerances& tol) {
    require_analyzable_state(p, rho0, tol);
    return ReachAnalyzer(p, tol).urr(rho0);
}

ReachResult reach_iterative(const Program& p, const ComplexMatrix& rho0, const Tolerances& tol) {
    require_analyzable_state(p, rho0, tol);
    const SuperOperator f = total_superop(p, tol);

    Subspace y = support(rho0, tol);
    if (y.is_full()) return ReachResult{std::move(y), p.dim, ReachMethod::iterative, 0};

    // The chain grows strictly until its fixpoint, so it must stabilize
    // within d - rank(rho0) <= d - 1 growth steps.
    for (Index n = 0; n < p.dim; ++n) {
        Subspace next = support(rho0 + f.apply(y.projector()), tol);
        if (subspace_eq(next, y, tol)) {
            const Index d = y.dim();
            return ReachResult{std::move(y), d, ReachMethod::iterative,
                               static_cast<std::size_t>(n)};
        }
        y = std::move(next);
    }
    throw NonConvergence("reach_iterative: chain did not stabilize within dim steps");
}

UrrResult urr_iterative(const Program& p, const ComplexMatrix& rho0, const Tolerances& tol) {
    const ReachResult start = reach_iterative(p, rho0, tol);
    const SuperOperator f = total_superop(p, tol);

    Subspace z = start.subspace;
    // Shrinking chain; stabilizes within d shrink steps.
    for (Index n = 0; n <= p.dim; ++n) {
        Subspace next = image(f, z, tol);
        if (subspace_eq(next, z, tol)) {
            const Index d = z.dim();
            return UrrResult{std::move(z), d, ReachMethod::iterative, static_cast<std::size_t>(n)};
        }
        z = std::move(next);
    }
    throw NonConvergence("urr_iterative: chain did not stabilize within dim steps");
}

}  // namespace qpv
