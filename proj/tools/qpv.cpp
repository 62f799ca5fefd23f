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
//
// Command-line driver: program-file ingestion, the reach/urr/termination
// analyses, their brute-force cross-checks, and bundled example programs.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "qpv/fixtures.hpp"
#include "qpv/io.hpp"
#include "qpv/oracle.hpp"
#include "qpv/reachability.hpp"
#include "qpv/termination.hpp"

namespace {

using namespace qpv;

struct CommonOptions {
    std::string path;
    bool json = false;
    bool timings = false;  // timings vary run to run, so JSON omits them unless asked
    double tolerance_scale = 1.0;
};

Tolerances tolerances_of(const CommonOptions& opts) {
    return Tolerances{}.scaled(opts.tolerance_scale);
}

Json json_tolerances(const Tolerances& tol) {
    Json out;
    out["rank_rel"] = tol.rank_rel;
    out["orth"] = tol.orth;
    out["herm"] = tol.herm;
    out["psd"] = tol.psd;
    out["subspace"] = tol.subspace;
    out["zero"] = tol.zero;
    out["measurement"] = tol.measurement;
    out["choi_rel"] = tol.choi_rel;
    return out;
}

Json report_header(const std::string& command, const CommonOptions& opts,
                   const ProgramInstance& inst) {
    Json report;
    report["command"] = command;
    report["input"] = opts.path;
    report["dimension"] = inst.program.dim;
    Json names = Json::array();
    for (int k = 1; k <= inst.program.process_count(); ++k)
        names.push_back(inst.program.name_of(k));
    report["processes"] = std::move(names);
    report["tolerances"] = json_tolerances(tolerances_of(opts));
    return report;
}

std::string format_complex(const Complex& z) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", z.real(), z.imag());
    return buf;
}

void print_basis(const Subspace& s) {
    for (Index j = 0; j < s.dim(); ++j) {
        std::string line = "  [";
        for (Index i = 0; i < s.ambient_dim(); ++i) {
            if (i > 0) line += ", ";
            line += format_complex(s.basis()(i, j));
        }
        std::cout << line << "]\n";
    }
}

Json json_basis(const Subspace& s) {
    Json out = Json::array();
    for (Index j = 0; j < s.dim(); ++j) out.push_back(json_vector(s.basis().col(j)));
    return out;
}

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void emit(const CommonOptions& opts, Json report, const Timer& timer) {
    if (opts.json) {
        if (opts.timings) report["timing_ms"] = timer.elapsed_ms();
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "elapsed: " << timer.elapsed_ms() << " ms\n";
    }
}

void print_kv(const CommonOptions& opts, const std::string& key, const std::string& value) {
    if (!opts.json) std::cout << key << ": " << value << "\n";
}

int run_validate(const CommonOptions& opts) {
    Timer timer;
    // Parse without the hard validation gate: this command's whole job is
    // to show the residuals, so re-read leniently when validation trips.
    ProgramInstance inst;
    bool state_ok = true;
    std::string state_message;
    try {
        inst = parse_program(opts.path, tolerances_of(opts));
    } catch (const ValidationError& e) {
        state_ok = false;
        state_message = e.what();
        Tolerances lenient = tolerances_of(opts);
        lenient.measurement = 1e18;
        lenient.zero = 1e18;
        lenient.psd = 1e18;
        inst = parse_program(opts.path, lenient);
    }

    const ProgramReport report = validate(inst.program, tolerances_of(opts));
    Json out = report_header("validate", opts, inst);
    out["ok"] = report.ok && state_ok;
    out["completeness_residual"] = report.completeness_residual;
    Json checks = Json::array();
    for (const auto& check : report.checks)
        checks.push_back(
            Json{{"what", check.what}, {"residual", check.residual}, {"ok", check.ok}});
    out["checks"] = std::move(checks);
    out["state_ok"] = state_ok;
    if (!state_ok) out["state_message"] = state_message;

    print_kv(opts, "command", "validate");
    print_kv(opts, "input", opts.path);
    if (!opts.json) {
        for (const auto& check : report.checks)
            std::cout << (check.ok ? "  ok   " : "  FAIL ") << check.what << " (residual "
                      << check.residual << ")\n";
        if (!state_ok) std::cout << "  FAIL initial state: " << state_message << "\n";
        std::cout << "result: " << (report.ok && state_ok ? "valid" : "INVALID") << "\n";
    }
    emit(opts, std::move(out), timer);
    return report.ok && state_ok ? 0 : 2;
}

int run_reach(const CommonOptions& opts, const std::string& method, bool use_cache, bool urr) {
    Timer timer;
    const Tolerances tol = tolerances_of(opts);
    const ProgramInstance inst = parse_program(opts.path, tol);

    Subspace subspace(inst.program.dim);
    std::size_t iterations = 0;
    if (method == "iterative") {
        if (urr) {
            const UrrResult r = urr_iterative(inst.program, inst.rho0, tol);
            subspace = r.subspace;
            iterations = r.iterations_used;
        } else {
            const ReachResult r = reach_iterative(inst.program, inst.rho0, tol);
            subspace = r.subspace;
            iterations = r.iterations_used;
        }
    } else if (use_cache) {
        const ReachAnalyzer analyzer(inst.program, tol);
        subspace = urr ? analyzer.urr(inst.rho0).subspace : analyzer.reach(inst.rho0).subspace;
    } else {
        subspace = urr ? urr_algorithm2(inst.program, inst.rho0, tol).subspace
                       : reach_algorithm1(inst.program, inst.rho0, tol).subspace;
    }

    const std::string command = urr ? "urr" : "reach";
    Json out = report_header(command, opts, inst);
    out["method"] = method;
    out["precompute_cache"] = use_cache;
    out["subspace_dim"] = subspace.dim();
    if (method == "iterative") out["iterations_used"] = iterations;
    out["basis"] = json_basis(subspace);

    print_kv(opts, "command", command);
    print_kv(opts, "input", opts.path);
    print_kv(opts, "method", method);
    print_kv(opts, "subspace dim",
             std::to_string(subspace.dim()) + " of " + std::to_string(subspace.ambient_dim()));
    if (!opts.json) print_basis(subspace);
    emit(opts, std::move(out), timer);
    return 0;
}

int run_terminate(const CommonOptions& opts, const std::string& schedule, int max_m_override) {
    Timer timer;
    const Tolerances tol = tolerances_of(opts);
    const ProgramInstance inst = parse_program(opts.path, tol);

    TerminationVerdict verdict;
    if (schedule == "all") {
        verdict = terminates_all(inst.program, inst.rho0, tol);
    } else {
        const int guard = max_m_override > 0 ? max_m_override : kDefaultMaxProcesses;
        verdict = terminates_fair(inst.program, inst.rho0, tol, guard);
    }

    Json out = report_header("terminate", opts, inst);
    out["schedule"] = schedule;
    out["terminates"] = verdict.terminates;
    // Bit convention: 0 reports termination, 1 reports a surviving state.
    out["verdict_bit"] = verdict.terminates ? 0 : 1;
    out["residual_norm"] = verdict.residual_norm;
    out["numerically_marginal"] = verdict.numerically_marginal;
    if (verdict.witness.has_value()) out["witness"] = verdict.witness->str();

    print_kv(opts, "command", "terminate");
    print_kv(opts, "input", opts.path);
    print_kv(opts, "schedule", schedule);
    print_kv(opts, "terminates", verdict.terminates ? "yes" : "no");
    print_kv(opts, "residual", std::to_string(verdict.residual_norm));
    if (verdict.numerically_marginal) print_kv(opts, "note", "numerically marginal");
    if (verdict.witness.has_value()) print_kv(opts, "witness path", verdict.witness->str());
    emit(opts, std::move(out), timer);
    return 0;
}

int run_fair_prefix(const CommonOptions& opts) {
    Timer timer;
    const Tolerances tol = tolerances_of(opts);
    const ProgramInstance inst = parse_program(opts.path, tol);
    const FairPrefixReport report = fair_prefix_check(inst.program, inst.rho0, tol);

    Json out = report_header("fair-prefix", opts, inst);
    out["path"] = report.path.str();
    out["residual_norm"] = report.residual_norm;
    out["terminated_along_prefix"] = report.terminated_along_prefix;

    print_kv(opts, "command", "fair-prefix");
    print_kv(opts, "round-robin path", report.path.str());
    print_kv(opts, "residual", std::to_string(report.residual_norm));
    print_kv(opts, "terminated along prefix", report.terminated_along_prefix ? "yes" : "no");
    emit(opts, std::move(out), timer);
    return 0;
}

int run_oracle(const CommonOptions& opts, const std::string& subcheck,
               const EnumerationBudget& budget, int max_m_override) {
    Timer timer;
    const Tolerances tol = tolerances_of(opts);
    const ProgramInstance inst = parse_program(opts.path, tol);
    Json out = report_header("oracle " + subcheck, opts, inst);

    bool agree = true;
    if (subcheck == "reach" || subcheck == "urr") {
        const bool urr = subcheck == "urr";
        const Subspace brute = urr ? bruteforce_urr(inst.program, inst.rho0, budget, tol)
                                   : bruteforce_reach(inst.program, inst.rho0, budget, tol);
        const Subspace closed = urr ? urr_algorithm2(inst.program, inst.rho0, tol).subspace
                                    : reach_algorithm1(inst.program, inst.rho0, tol).subspace;
        const Subspace iter = urr ? urr_iterative(inst.program, inst.rho0, tol).subspace
                                  : reach_iterative(inst.program, inst.rho0, tol).subspace;
        agree = subspace_eq(brute, closed, tol) && subspace_eq(brute, iter, tol);
        out["bruteforce_dim"] = brute.dim();
        out["closed_form_dim"] = closed.dim();
        out["iterative_dim"] = iter.dim();
        out["agree"] = agree;
        out["bruteforce_basis"] = json_basis(brute);
        print_kv(opts, "bruteforce dim", std::to_string(brute.dim()));
        print_kv(opts, "closed form dim", std::to_string(closed.dim()));
        print_kv(opts, "iterative dim", std::to_string(iter.dim()));
    } else if (subcheck == "terminate-all") {
        const bool brute = bruteforce_terminates_all(inst.program, inst.rho0, budget, tol);
        const TerminationVerdict verdict = terminates_all(inst.program, inst.rho0, tol);
        agree = brute == verdict.terminates;
        out["bruteforce_terminates"] = brute;
        out["verdict_terminates"] = verdict.terminates;
        out["agree"] = agree;
        print_kv(opts, "bruteforce", brute ? "terminates" : "survives");
        print_kv(opts, "decision procedure", verdict.terminates ? "terminates" : "survives");
    } else if (subcheck == "terminate-fair") {
        const bool brute = bruteforce_terminates_fair(inst.program, inst.rho0, budget, tol);
        const int guard = max_m_override > 0 ? max_m_override : kDefaultMaxProcesses;
        const TerminationVerdict verdict = terminates_fair(inst.program, inst.rho0, tol, guard);
        agree = brute == verdict.terminates;
        out["bruteforce_terminates"] = brute;
        out["verdict_terminates"] = verdict.terminates;
        out["agree"] = agree;
        print_kv(opts, "bruteforce", brute ? "terminates" : "survives");
        print_kv(opts, "decision procedure", verdict.terminates ? "terminates" : "survives");
    } else {  // pi
        const auto pi = enumerate_pi(inst.program.process_count(), inst.program.dim, budget);
        out["expansion_count"] =
            pi_expansion_count(inst.program.process_count(), inst.program.dim);
        out["size"] = pi.size();
        Json words = Json::array();
        for (const auto& f : pi) words.push_back(f.str());
        out["elements"] = std::move(words);
        print_kv(opts, "fair pieces", std::to_string(pi.size()));
        if (!opts.json) {
            std::size_t shown = 0;
            for (const auto& f : pi) {
                if (shown++ == 32) {
                    std::cout << "  ... (" << pi.size() - 32 << " more)\n";
                    break;
                }
                std::cout << "  " << f.str() << "\n";
            }
        }
    }

    print_kv(opts, "agree", agree ? "yes" : "no");
    emit(opts, std::move(out), timer);
    return 0;
}

int run_example(const std::string& name, const std::string& out_path) {
    const ProgramInstance inst = example_by_name(name);
    if (out_path.empty()) {
        std::cout << serialize_program(inst).dump(2) << "\n";
    } else {
        write_program(inst, out_path);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reachability and termination analysis of concurrent quantum programs"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string method = "algorithm1";
    std::string schedule = "all";
    std::string oracle_subcheck;
    std::string example_name;
    std::string example_out;
    bool use_cache = false;
    int max_m_override = 0;
    EnumerationBudget budget;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", opts.path, "program file (.qprog)")->required();
        cmd->add_flag("--json", opts.json, "machine-readable report on stdout");
        cmd->add_flag("--timings", opts.timings,
                      "include timings in the JSON report (breaks bit-stability)");
        cmd->add_option("--tolerance", opts.tolerance_scale,
                        "scale factor applied to every tolerance")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* validate_cmd = app.add_subcommand("validate", "check a program file");
    add_common(validate_cmd);

    CLI::App* reach_cmd = app.add_subcommand("reach", "compute the reachable space");
    add_common(reach_cmd);
    reach_cmd->add_option("--method", method)->check(CLI::IsMember({"algorithm1", "iterative"}));
    reach_cmd->add_flag("--precompute-cache", use_cache,
                        "solve through the cached factorization path");

    CLI::App* urr_cmd =
        app.add_subcommand("urr", "compute the uniformly repeatedly reachable space");
    add_common(urr_cmd);
    urr_cmd->add_option("--method", method)->check(CLI::IsMember({"algorithm1", "iterative"}));
    urr_cmd->add_flag("--precompute-cache", use_cache,
                      "solve through the cached factorization path");

    CLI::App* term_cmd = app.add_subcommand("terminate", "decide termination");
    add_common(term_cmd);
    term_cmd->add_option("--schedule", schedule)->check(CLI::IsMember({"all", "fair"}));
    term_cmd->add_option("--max-m-override", max_m_override,
                         "raise the factorial guard on the process count");

    CLI::App* prefix_cmd =
        app.add_subcommand("fair-prefix", "diagnostic run along the round-robin prefix");
    add_common(prefix_cmd);

    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "brute-force cross-checks of the analyses");
    oracle_cmd->add_option("subcheck", oracle_subcheck)
        ->required()
        ->check(CLI::IsMember({"reach", "urr", "terminate-all", "terminate-fair", "pi"}));
    add_common(oracle_cmd);
    oracle_cmd->add_option("--max-path-len", budget.max_path_len);
    oracle_cmd->add_option("--max-m", budget.max_m);
    oracle_cmd->add_option("--max-d", budget.max_d);
    oracle_cmd->add_option("--max-pi-size", budget.max_pi_size);
    oracle_cmd->add_option("--max-m-override", max_m_override,
                           "raise the factorial guard on the process count");

    CLI::App* example_cmd = app.add_subcommand("example", "emit a bundled example program");
    example_cmd->add_option("name", example_name)
        ->required()
        ->check(CLI::IsMember({"walk", "flip", "identity"}));
    example_cmd->add_option("-o,--output", example_out, "write to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return run_validate(opts);
        if (reach_cmd->parsed()) return run_reach(opts, method, use_cache, /*urr=*/false);
        if (urr_cmd->parsed()) return run_reach(opts, method, use_cache, /*urr=*/true);
        if (term_cmd->parsed()) return run_terminate(opts, schedule, max_m_override);
        if (prefix_cmd->parsed()) return run_fair_prefix(opts);
        if (oracle_cmd->parsed()) return run_oracle(opts, oracle_subcheck, budget, max_m_override);
        if (example_cmd->parsed()) return run_example(example_name, example_out);
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const TooManyProcesses& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
