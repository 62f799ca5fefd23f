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

#include "qpv/termination.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qpv/errors.hpp"
#include "qpv/reachability.hpp"

namespace qpv {

const char* schedule_name(ScheduleKind kind) {
    return kind == ScheduleKind::all ? "all" : "fair";
}

namespace {

double operator_two_norm(const ComplexMatrix& m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m.adjoint() * m, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

/// Repeatedly applies m to the renormalized vector, testing each step for
/// collapse relative to ||m||_2. Returns the smallest relative one-step
/// survival ratio seen; a value <= tol.zero means some power of m
/// annihilates the start vector, which is exactly the termination condition
/// (a zero at power j stays zero at every later power).
double min_step_survival(const ComplexMatrix& m, ComplexVector x, unsigned steps,
                         const Tolerances& tol) {
    const double op_scale = std::max(operator_two_norm(m), 1e-300);
    double x_norm = x.norm();
    if (x_norm == 0.0) return 0.0;
    x /= x_norm;
    double min_ratio = std::numeric_limits<double>::infinity();
    for (unsigned i = 0; i < steps; ++i) {
        x = m * x;
        const double n = x.norm();
        min_ratio = std::min(min_ratio, n / op_scale);
        if (min_ratio <= tol.zero) return min_ratio;  // collapsed; later powers stay zero
        x /= n;
    }
    return min_ratio;
}

TerminationVerdict verdict_from_residual(double residual, ScheduleKind schedule,
                                         const Tolerances& tol) {
    TerminationVerdict v;
    v.schedule = schedule;
    v.residual_norm = residual;
    v.terminates = residual <= tol.zero;
    v.numerically_marginal = residual >= tol.zero / 10.0 && residual <= tol.zero * 10.0;
    return v;
}

/// Greedy length-d path maximizing the scale-relative surviving trace at
/// every step. Only called when the verdict is non-terminating; may still
/// fail to certify.
std::optional<PathString> greedy_witness(const Program& p, const ComplexMatrix& rho0,
                                         const Tolerances& tol) {
    std::vector<SuperOperator> steps;
    std::vector<double> scales;
    for (int k = 1; k <= p.process_count(); ++k) {
        steps.push_back(step_superop(p, k, tol));
        scales.push_back(std::max(max_trace_factor(steps.back()), 1e-300));
    }

    PathString path;
    ComplexMatrix state = rho0 / rho0.real().trace();
    for (Index n = 0; n < p.dim; ++n) {
        int best = 0;
        double best_ratio = -1.0;
        double best_trace = 0.0;
        ComplexMatrix best_state;
        for (int k = 1; k <= p.process_count(); ++k) {
            ComplexMatrix candidate = steps[static_cast<std::size_t>(k - 1)].apply(state);
            const double ratio =
                candidate.real().trace() / scales[static_cast<std::size_t>(k - 1)];
            if (ratio > best_ratio) {
                best_ratio = ratio;
                best_trace = candidate.real().trace();
                best = k;
                best_state = std::move(candidate);
            }
        }
        if (best_ratio <= tol.zero) return std::nullopt;
        path.symbols.push_back(best);
        state = best_state / best_trace;
    }
    return path;
}

}  // namespace

TerminationVerdict terminates_all(const Program& p, const ComplexMatrix& rho0,
                                  const Tolerances& tol) {
    require_analyzable_state(p, rho0, tol);
    const MatrixRep n = matrix_rep(total_superop(p, tol));
    const double residual =
        min_step_survival(n.matrix, vec(rho0), static_cast<unsigned>(p.dim), tol);
    TerminationVerdict v = verdict_from_residual(residual, ScheduleKind::all, tol);
    if (!v.terminates) v.witness = greedy_witness(p, rho0, tol);
    return v;
}

PermutationMachinery build_permutation_machinery(const Program& p, const Tolerances& tol,
                                                 int max_processes) {
    const int m = p.process_count();
    if (m > max_processes)
        throw TooManyProcesses("fair termination: " + std::to_string(m) +
                               " processes exceed the factorial guard of " +
                               std::to_string(max_processes));

    std::vector<MatrixRep> step_reps;
    step_reps.reserve(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) step_reps.push_back(matrix_rep(step_superop(p, k, tol)));

    const Index dd = p.dim * p.dim;
    ComplexMatrix n = ComplexMatrix::Zero(dd, dd);
    for (const auto& rep : step_reps) n += rep.matrix;

    // g_poly = I + N + ... + N^(d-1), accumulated as G <- I + N G.
    const ComplexMatrix eye = ComplexMatrix::Identity(dd, dd);
    ComplexMatrix g = eye;
    for (Index i = 1; i < p.dim; ++i) g = eye + n * g;

    PermutationMachinery machinery;
    machinery.g_poly = MatrixRep{p.dim, g};

    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    ComplexMatrix total = ComplexMatrix::Zero(dd, dd);
    do {
        ComplexMatrix l = step_reps[static_cast<std::size_t>(perm[0] - 1)].matrix;
        for (int i = 1; i < m; ++i)
            l = step_reps[static_cast<std::size_t>(perm[i] - 1)].matrix * g * l;
        total += l;
        machinery.permutations.push_back(perm);
        machinery.per_perm.push_back(MatrixRep{p.dim, std::move(l)});
    } while (std::next_permutation(perm.begin(), perm.end()));

    machinery.total = MatrixRep{p.dim, std::move(total)};
    return machinery;
}

TerminationVerdict terminates_fair(const Program& p, const ComplexMatrix& rho0,
                                   const Tolerances& tol, int max_processes) {
    require_analyzable_state(p, rho0, tol);
    const PermutationMachinery machinery = build_permutation_machinery(p, tol, max_processes);

    // The permutation total can be the exact zero map even though every
    // factor is nonzero (the products cancel), in which case the computed
    // matrix is rounding noise at the scale of the intermediate products.
    // Judge that against the assembly scale before trusting ||total|| as a
    // reference for the per-step test.
    double factor_scale = 1.0;
    for (int k = 1; k <= p.process_count(); ++k)
        factor_scale *= matrix_rep(step_superop(p, k, tol)).matrix.norm();
    double assembly_scale = factor_scale;
    for (int i = 1; i < p.process_count(); ++i) assembly_scale *= machinery.g_poly.matrix.norm();
    for (int i = 2; i <= p.process_count(); ++i) assembly_scale *= i;  // m! summands

    const double total_norm = machinery.total.matrix.norm();
    if (total_norm <= tol.zero * assembly_scale) {
        return verdict_from_residual(
            assembly_scale > 0.0 ? total_norm / assembly_scale : 0.0, ScheduleKind::fair, tol);
    }

    const double residual =
        min_step_survival(machinery.total.matrix, vec(rho0), static_cast<unsigned>(p.dim), tol);
    return verdict_from_residual(residual, ScheduleKind::fair, tol);
}

FairPrefixReport fair_prefix_check(const Program& p, const ComplexMatrix& rho0,
                                   const Tolerances& tol) {
    require_analyzable_state(p, rho0, tol);
    std::vector<SuperOperator> steps;
    std::vector<double> scales;
    for (int k = 1; k <= p.process_count(); ++k) {
        steps.push_back(step_superop(p, k, tol));
        scales.push_back(std::max(max_trace_factor(steps.back()), 1e-300));
    }

    FairPrefixReport report;
    report.path = round_robin_prefix(p.process_count(), static_cast<std::size_t>(p.dim));

    // Product of one-step trace ratios, each relative to that step's
    // largest achievable trace factor; comparable against the zero
    // tolerance regardless of how the program is scaled.
    ComplexMatrix state = rho0 / rho0.real().trace();
    double residual = 1.0;
    for (int label : report.path.symbols) {
        state = steps[static_cast<std::size_t>(label - 1)].apply(state);
        const double t = std::max(state.real().trace(), 0.0);
        residual *= t / scales[static_cast<std::size_t>(label - 1)];
        if (residual <= tol.zero) {
            residual = std::max(residual, 0.0);
            break;
        }
        state /= t;
    }
    report.residual_norm = residual;
    report.terminated_along_prefix = residual <= tol.zero;
    return report;
}

}  // namespace qpv
