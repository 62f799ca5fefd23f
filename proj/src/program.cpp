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

#include "qpv/program.hpp"

#include <cmath>
#include <random>

#include "qpv/errors.hpp"

namespace qpv {

PathString PathString::parse(const std::string& text) {
    std::vector<int> syms;
    syms.reserve(text.size());
    for (char c : text) {
        if (c < '1' || c > '9') throw ParseError("path string: expected digits 1-9");
        syms.push_back(c - '0');
    }
    return PathString(std::move(syms));
}

std::string PathString::str() const {
    bool wide = false;
    for (int s : symbols) wide = wide || s > 9;
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (wide && i > 0) out += ' ';
        out += std::to_string(symbols[i]);
    }
    return out;
}

PathString PathString::operator+(const PathString& other) const {
    PathString out = *this;
    out.symbols.insert(out.symbols.end(), other.symbols.begin(), other.symbols.end());
    return out;
}

const SuperOperator& Program::process(int label) const {
    if (label < 1 || label > process_count())
        throw UnknownProcess("program: no process labeled " + std::to_string(label));
    return processes[static_cast<std::size_t>(label - 1)];
}

std::string Program::name_of(int label) const {
    const auto idx = static_cast<std::size_t>(label - 1);
    if (label >= 1 && idx < process_names.size() && !process_names[idx].empty())
        return process_names[idx];
    return "p" + std::to_string(label);
}

ProgramReport validate(const Program& p, const Tolerances& tol) {
    ProgramReport report;
    report.dim = p.dim;
    report.process_count = p.process_count();

    auto add = [&](const std::string& what, double residual, bool ok) {
        report.checks.push_back({what, residual, ok});
        report.ok = report.ok && ok;
    };

    bool shapes_ok = p.dim > 0 && !p.processes.empty() && p.m0.rows() == p.dim &&
                     p.m0.cols() == p.dim && p.m1.rows() == p.dim && p.m1.cols() == p.dim;
    for (const auto& e : p.processes) shapes_ok = shapes_ok && e.dim() == p.dim;
    add("shapes", 0.0, shapes_ok);
    if (!shapes_ok) return report;

    const ComplexMatrix eye = ComplexMatrix::Identity(p.dim, p.dim);
    report.completeness_residual = (p.m0.adjoint() * p.m0 + p.m1.adjoint() * p.m1 - eye).norm();
    add("measurement completeness", report.completeness_residual,
        report.completeness_residual <= tol.measurement);

    for (int k = 1; k <= p.process_count(); ++k) {
        const double residual = (p.process(k).kraus_gram() - eye).norm();
        add("trace preservation (" + p.name_of(k) + ")", residual, residual <= tol.measurement);
    }
    return report;
}

SuperOperator step_superop(const Program& p, int label, const Tolerances& tol) {
    // Guarded step: the continue-branch of the measurement feeds the process.
    return compose(p.process(label), SuperOperator::conjugation(p.m1), tol);
}

SuperOperator total_superop(const Program& p, const Tolerances& tol) {
    std::vector<SuperOperator> steps;
    steps.reserve(p.processes.size());
    for (int k = 1; k <= p.process_count(); ++k) steps.push_back(step_superop(p, k, tol));
    return sum(steps, tol);
}

SuperOperator normalized_superop(const Program& p, const Tolerances& tol) {
    return scale(total_superop(p, tol), 1.0 / p.process_count());
}

ExecutionTrace run_path(const Program& p, const PathString& f, const ComplexMatrix& rho0,
                        const Tolerances& tol) {
    if (rho0.rows() != p.dim || rho0.cols() != p.dim)
        throw InvalidState("run_path: initial state of wrong shape");
    if (!is_positive_semidefinite(rho0, tol))
        throw InvalidState("run_path: initial state is not positive-semidefinite");
    const double trace = rho0.real().trace();
    if (std::abs(trace - 1.0) > tol.zero)
        throw InvalidState("run_path: initial state must have unit trace");

    ExecutionTrace trace_out;
    trace_out.states.reserve(f.length() + 1);
    trace_out.states.push_back(rho0 / trace);
    for (int label : f.symbols) {
        const SuperOperator& e = p.process(label);  // throws UnknownProcess
        const ComplexMatrix& current = trace_out.states.back();
        trace_out.states.push_back(e.apply(p.m1 * current * p.m1.adjoint()));
    }
    for (const auto& state : trace_out.states) {
        trace_out.nonterm_probs.push_back(state.real().trace());
        trace_out.term_probs.push_back((p.m0 * state * p.m0.adjoint()).real().trace());
    }
    return trace_out;
}

FairnessStats fairness_stats(const PathString& f, int m) {
    if (m < 1) throw UnknownProcess("fairness_stats: need at least one process");
    FairnessStats stats;
    stats.prefix_len = f.length();
    stats.counts.assign(static_cast<std::size_t>(m), 0);
    for (int s : f.symbols) {
        if (s < 1 || s > m)
            throw UnknownProcess("fairness_stats: symbol " + std::to_string(s) + " out of range");
        ++stats.counts[static_cast<std::size_t>(s - 1)];
    }
    if (stats.prefix_len > 0) {
        std::size_t min_count = stats.counts.front();
        for (std::size_t c : stats.counts) min_count = std::min(min_count, c);
        stats.min_frequency =
            static_cast<double>(min_count) / static_cast<double>(stats.prefix_len);
    }
    return stats;
}

bool is_fair_piece(const PathString& f, int m) {
    const FairnessStats stats = fairness_stats(f, m);
    for (std::size_t c : stats.counts)
        if (c == 0) return false;
    return true;
}

PathString round_robin_prefix(int m, std::size_t pieces) {
    PathString out;
    out.symbols.reserve(static_cast<std::size_t>(m) * pieces);
    for (std::size_t i = 0; i < pieces; ++i)
        for (int k = 1; k <= m; ++k) out.symbols.push_back(k);
    return out;
}

PathString repeat_word_prefix(const PathString& word, std::size_t times) {
    PathString out;
    out.symbols.reserve(word.length() * times);
    for (std::size_t i = 0; i < times; ++i)
        out.symbols.insert(out.symbols.end(), word.symbols.begin(), word.symbols.end());
    return out;
}

PathString random_prefix(int m, std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, m);
    PathString out;
    out.symbols.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.symbols.push_back(pick(rng));
    return out;
}

}  // namespace qpv
