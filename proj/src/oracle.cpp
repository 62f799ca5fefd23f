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

#include "qpv/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qpv/errors.hpp"
#include "qpv/linalg.hpp"
#include "qpv/reachability.hpp"

namespace qpv {

namespace {

void require_within_budget(const Program& p, std::size_t needed_len,
                           const EnumerationBudget& budget) {
    if (p.process_count() > budget.max_m)
        throw BudgetExceeded("oracle: " + std::to_string(p.process_count()) +
                             " processes exceed the enumeration budget of " +
                             std::to_string(budget.max_m));
    if (p.dim > budget.max_d)
        throw BudgetExceeded("oracle: dimension " + std::to_string(p.dim) +
                             " exceeds the enumeration budget of " + std::to_string(budget.max_d));
    if (needed_len > budget.max_path_len)
        throw BudgetExceeded("oracle: path length " + std::to_string(needed_len) +
                             " exceeds the enumeration budget of " +
                             std::to_string(budget.max_path_len));
}

std::vector<SuperOperator> guarded_steps(const Program& p, const Tolerances& tol) {
    std::vector<SuperOperator> steps;
    steps.reserve(p.processes.size());
    for (int k = 1; k <= p.process_count(); ++k) steps.push_back(step_superop(p, k, tol));
    return steps;
}

struct Node {
    ComplexMatrix state;
    std::size_t depth;
    int next_label;
};

/// Depth-first walk over all paths up to max_len in lexicographic order,
/// calling visit(state, depth) on every surviving node (the root included).
/// Dead branches (trace below the zero tolerance relative to rho0) are
/// pruned together with all their continuations.
template <typename Visit>
void walk_paths(const std::vector<SuperOperator>& steps, const ComplexMatrix& rho0,
                std::size_t max_len, const Tolerances& tol, Visit&& visit) {
    const double prune = tol.zero * rho0.real().trace();
    const int m = static_cast<int>(steps.size());

    std::vector<Node> stack;
    stack.push_back({rho0, 0, 1});
    visit(rho0, std::size_t{0});
    while (!stack.empty()) {
        Node& top = stack.back();
        if (top.depth == max_len || top.next_label > m) {
            stack.pop_back();
            continue;
        }
        const int label = top.next_label++;
        ComplexMatrix child = steps[static_cast<std::size_t>(label - 1)].apply(top.state);
        if (child.real().trace() <= prune) continue;
        const std::size_t depth = top.depth + 1;
        visit(child, depth);
        stack.push_back({std::move(child), depth, 1});
    }
}

}  // namespace

Subspace bruteforce_reach_window(const Program& p, const ComplexMatrix& rho0,
                                 std::size_t min_len, std::size_t max_len,
                                 const EnumerationBudget& budget, const Tolerances& tol) {
    require_analyzable_state(p, rho0, tol);
    require_within_budget(p, max_len, budget);

    const std::vector<SuperOperator> steps = guarded_steps(p, tol);
    std::vector<ComplexVector> collected;
    walk_paths(steps, rho0, max_len, tol, [&](const ComplexMatrix& state, std::size_t depth) {
        if (depth < min_len) return;
        const Subspace s = support(state, tol);
        for (Index j = 0; j < s.dim(); ++j) collected.push_back(s.basis().col(j));
    });
    return orthonormalize(p.dim, collected, tol);
}

Subspace bruteforce_reach(const Program& p, const ComplexMatrix& rho0,
                          const EnumerationBudget& budget, const Tolerances& tol) {
    return bruteforce_reach_window(p, rho0, 0, static_cast<std::size_t>(p.dim) - 1, budget, tol);
}

Subspace bruteforce_urr(const Program& p, const ComplexMatrix& rho0,
                        const EnumerationBudget& budget, const Tolerances& tol) {
    const auto d = static_cast<std::size_t>(p.dim);
    return bruteforce_reach_window(p, rho0, d, 2 * d - 1, budget, tol);
}

bool bruteforce_terminates_all(const Program& p, const ComplexMatrix& rho0,
                               const EnumerationBudget& budget, const Tolerances& tol) {
    require_analyzable_state(p, rho0, tol);
    const auto d = static_cast<std::size_t>(p.dim);
    require_within_budget(p, d, budget);

    const std::vector<SuperOperator> steps = guarded_steps(p, tol);
    const int m = p.process_count();
    std::vector<double> step_scales;
    for (const auto& s : steps) step_scales.push_back(std::max(max_trace_factor(s), 1e-300));

    // A path state reaches exact zero iff some single step collapses it, so
    // the dead-branch test is the one-step survival ratio relative to that
    // step's largest achievable trace factor, not the accumulated trace:
    // a path may shrink steadily without ever dying. States are kept
    // trace-normalized along the way.
    std::vector<Node> stack;
    stack.push_back({rho0 / rho0.real().trace(), 0, 1});
    while (!stack.empty()) {
        Node& top = stack.back();
        if (top.depth == d) return false;  // a surviving length-d path
        if (top.next_label > m) {
            stack.pop_back();
            continue;
        }
        const int label = top.next_label++;
        ComplexMatrix child = steps[static_cast<std::size_t>(label - 1)].apply(top.state);
        const double survival = child.real().trace();
        if (survival <= tol.zero * step_scales[static_cast<std::size_t>(label - 1)]) continue;
        stack.push_back({child / survival, top.depth + 1, 1});
    }
    return true;
}

std::size_t pi_expansion_count(int m, Index d) {
    std::size_t fillers = 0;
    std::size_t pow = 1;
    for (Index j = 0; j < d; ++j) {
        fillers += pow;
        pow *= static_cast<std::size_t>(m);
    }
    std::size_t count = 1;
    for (int i = 2; i <= m; ++i) count *= static_cast<std::size_t>(i);  // m!
    for (int i = 1; i < m; ++i) count *= fillers;
    return count;
}

std::vector<PathString> enumerate_pi(int m, Index d, const EnumerationBudget& budget) {
    if (m < 1) throw UnknownProcess("enumerate_pi: need at least one process");
    if (d < 1) throw DimensionMismatch("enumerate_pi: dimension must be positive");
    if (pi_expansion_count(m, d) > budget.max_pi_size)
        throw BudgetExceeded("enumerate_pi: " + std::to_string(pi_expansion_count(m, d)) +
                             " expansions exceed the budget of " +
                             std::to_string(budget.max_pi_size));

    // All fillers: words over {1..m} of length < d, in length-then-lex order.
    std::vector<PathString> fillers;
    fillers.emplace_back();
    std::size_t block_start = 0;
    for (Index len = 1; len < d; ++len) {
        const std::size_t block_end = fillers.size();
        for (std::size_t i = block_start; i < block_end; ++i)
            for (int k = 1; k <= m; ++k) {
                PathString extended = fillers[i];
                extended.symbols.push_back(k);
                fillers.push_back(std::move(extended));
            }
        block_start = block_end;
    }

    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<PathString> expansions;
    do {
        // Odometer over the m-1 filler slots.
        std::vector<std::size_t> choice(static_cast<std::size_t>(m > 0 ? m - 1 : 0), 0);
        while (true) {
            PathString word;
            for (int i = 0; i < m; ++i) {
                word.symbols.push_back(perm[static_cast<std::size_t>(i)]);
                if (i + 1 < m)
                    word = word + fillers[choice[static_cast<std::size_t>(i)]];
            }
            expansions.push_back(std::move(word));
            std::size_t slot = 0;
            for (; slot < choice.size(); ++slot) {
                if (++choice[slot] < fillers.size()) break;
                choice[slot] = 0;
            }
            if (slot == choice.size()) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(expansions.begin(), expansions.end());
    expansions.erase(std::unique(expansions.begin(), expansions.end()), expansions.end());
    return expansions;
}

bool bruteforce_terminates_fair(const Program& p, const ComplexMatrix& rho0,
                                const EnumerationBudget& budget, const Tolerances& tol) {
    require_analyzable_state(p, rho0, tol);
    const int m = p.process_count();
    require_within_budget(p, static_cast<std::size_t>(m + (m - 1) * (p.dim - 1)), budget);

    const std::vector<SuperOperator> steps = guarded_steps(p, tol);
    const std::vector<PathString> pi = enumerate_pi(m, p.dim, budget);

    std::vector<double> step_scales;
    for (const auto& s : steps) step_scales.push_back(max_trace_factor(s));

    std::vector<SuperOperator> per_path;
    per_path.reserve(pi.size());
    double assembly_scale = 0.0;  // upper bound on the summed trace factors
    for (const PathString& f : pi) {
        SuperOperator op = steps[static_cast<std::size_t>(f.symbols.front() - 1)];
        double bound = step_scales[static_cast<std::size_t>(f.symbols.front() - 1)];
        for (std::size_t i = 1; i < f.symbols.size(); ++i) {
            op = compose(steps[static_cast<std::size_t>(f.symbols[i] - 1)], op, tol);
            bound *= step_scales[static_cast<std::size_t>(f.symbols[i] - 1)];
        }
        per_path.push_back(std::move(op));
        assembly_scale += bound;
    }
    const SuperOperator total = sum(per_path, tol);

    // The summed map can be the exact zero map even though every composed
    // path operator was built from nonzero factors; in that case its Kraus
    // list is rounding noise at the scale of the intermediate products, so
    // judge the map against the assembly bound first.
    const double op_scale = max_trace_factor(total);
    if (op_scale <= tol.zero * std::max(assembly_scale, 1e-300)) return true;

    // tr(T(rho)) = tr(gram rho) <= lambda_max(gram) tr(rho); collapse is
    // judged against that attainable maximum, which makes the test invariant
    // under scaling of both the state and the operator.
    ComplexMatrix state = rho0 / rho0.real().trace();
    for (Index i = 0; i < p.dim; ++i) {
        state = total.apply(state);
        const double t = state.real().trace();
        if (t <= tol.zero * op_scale) return true;
        state /= t;
    }
    return false;
}

}  // namespace qpv
