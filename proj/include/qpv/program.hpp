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

#include <cstdint>
#include <string>
#include <vector>

#include "qpv/config.hpp"
#include "qpv/superop.hpp"

namespace qpv {

/// A finite execution path: a word over the process labels {1..m}.
struct PathString {
    std::vector<int> symbols;

    PathString() = default;
    explicit PathString(std::vector<int> syms) : symbols(std::move(syms)) {}
    /// Parses digit strings like "1212" (labels 1..9 only).
    static PathString parse(const std::string& text);

    std::size_t length() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
    std::string str() const;

    PathString operator+(const PathString& other) const;
    bool operator==(const PathString& other) const = default;
    bool operator<(const PathString& other) const { return symbols < other.symbols; }
};

/// A concurrent quantum program: m processes acting on a shared
/// d-dimensional state space, each a trace-preserving channel, plus a
/// two-outcome termination measurement {M0, M1}. Outcome 0 terminates;
/// outcome 1 hands the surviving state to the next scheduled process.
struct Program {
    Index dim = 0;
    std::vector<SuperOperator> processes;     // E_k, 1-based labels map to index k-1
    std::vector<std::string> process_names;   // display names, same order
    ComplexMatrix m0;
    ComplexMatrix m1;

    int process_count() const { return static_cast<int>(processes.size()); }
    const SuperOperator& process(int label) const;  // throws UnknownProcess
    std::string name_of(int label) const;
};

struct ProgramCheck {
    std::string what;
    double residual = 0.0;
    bool ok = false;
};

struct ProgramReport {
    Index dim = 0;
    int process_count = 0;
    double completeness_residual = 0.0;   // ||M0^dag M0 + M1^dag M1 - I||_F
    std::vector<ProgramCheck> checks;
    bool ok = true;
};

/// One run of the deterministic partial-state semantics along a finite path.
/// states[n] is the unnormalized state after n scheduled steps; its trace is
/// the probability that the program has not yet terminated.
struct ExecutionTrace {
    std::vector<ComplexMatrix> states;
    std::vector<double> term_probs;     // termination probability measured on states[n]
    std::vector<double> nonterm_probs;  // tr(states[n])
};

struct FairnessStats {
    std::size_t prefix_len = 0;
    std::vector<std::size_t> counts;  // occurrences of each label 1..m
    double min_frequency = 0.0;       // min_k counts[k] / prefix_len (0 for the empty prefix)
};

/// Structural validation: measurement completeness and per-process
/// trace preservation. Collects every failure instead of aborting.
ProgramReport validate(const Program& p, const Tolerances& tol = Tolerances{});

/// One guarded step of process k: rho |-> E_k(M1 rho M1^dag). The surviving
/// branch of the termination measurement feeds the process action, so the
/// result is trace-nonincreasing even though E_k preserves trace.
SuperOperator step_superop(const Program& p, int label, const Tolerances& tol = Tolerances{});

/// Sum of all guarded steps.
SuperOperator total_superop(const Program& p, const Tolerances& tol = Tolerances{});

/// total_superop / m; trace-nonincreasing, so its matrix representation has
/// spectral radius at most 1.
SuperOperator normalized_superop(const Program& p, const Tolerances& tol = Tolerances{});

/// Runs the partial-state semantics along f starting from rho0 (trace must
/// be 1 within the zero tolerance; slight deviations are renormalized).
ExecutionTrace run_path(const Program& p, const PathString& f, const ComplexMatrix& rho0,
                        const Tolerances& tol = Tolerances{});

FairnessStats fairness_stats(const PathString& f, int m);

/// True iff every label 1..m occurs in f.
bool is_fair_piece(const PathString& f, int m);

// Finite prefixes of the standard infinite schedules. No infinite object
// exists at runtime; every analysis in this library is decided on finite data.
PathString round_robin_prefix(int m, std::size_t pieces);
PathString repeat_word_prefix(const PathString& word, std::size_t times);
PathString random_prefix(int m, std::size_t length, std::uint64_t seed);

}  // namespace qpv
