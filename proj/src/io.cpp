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

#include "qpv/io.hpp"

#include <fstream>
#include <sstream>

#include "qpv/errors.hpp"

namespace qpv {

namespace {

Complex read_complex(const Json& node, const std::string& where) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
        throw ParseError(where + ": complex scalar must be a [re, im] number pair");
    return Complex(node[0].get<double>(), node[1].get<double>());
}

ComplexVector read_vector(const Json& node, Index dim, const std::string& where) {
    if (!node.is_array() || static_cast<Index>(node.size()) != dim)
        throw ParseError(where + ": expected a vector of length " + std::to_string(dim));
    ComplexVector v(dim);
    for (Index i = 0; i < dim; ++i)
        v(i) = read_complex(node[static_cast<std::size_t>(i)], where);
    return v;
}

ComplexMatrix read_matrix(const Json& node, Index dim, const std::string& where) {
    if (!node.is_array() || static_cast<Index>(node.size()) != dim)
        throw ParseError(where + ": expected a " + std::to_string(dim) + "x" +
                         std::to_string(dim) + " matrix (array of rows)");
    ComplexMatrix m(dim, dim);
    for (Index i = 0; i < dim; ++i) {
        const Json& row = node[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != dim)
            throw ParseError(where + ": row " + std::to_string(i) + " has wrong length");
        for (Index j = 0; j < dim; ++j)
            m(i, j) = read_complex(row[static_cast<std::size_t>(j)],
                                   where + "[" + std::to_string(i) + "]");
    }
    return m;
}

const Json& field(const Json& node, const std::string& key, const std::string& where) {
    const auto it = node.find(key);
    if (it == node.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

ProgramInstance parse_document(const Json& doc, const Tolerances& tol) {
    if (!doc.is_object()) throw ParseError("program file: top level must be an object");

    const Json& dim_node = field(doc, "dimension", "program file");
    if (!dim_node.is_number_unsigned() || dim_node.get<Index>() < 1)
        throw ParseError("program file: 'dimension' must be a positive integer");
    const Index dim = dim_node.get<Index>();

    ProgramInstance instance;
    instance.program.dim = dim;

    const Json& processes = field(doc, "processes", "program file");
    if (!processes.is_array() || processes.empty())
        throw ParseError("program file: 'processes' must be a nonempty array");
    for (std::size_t i = 0; i < processes.size(); ++i) {
        const std::string where = "processes[" + std::to_string(i) + "]";
        const Json& proc = processes[i];
        if (!proc.is_object()) throw ParseError(where + ": must be an object");
        std::string name = "p" + std::to_string(i + 1);
        if (const auto it = proc.find("name"); it != proc.end()) {
            if (!it->is_string()) throw ParseError(where + ": 'name' must be a string");
            name = it->get<std::string>();
        }
        const Json& kraus_node = field(proc, "kraus", where);
        if (!kraus_node.is_array() || kraus_node.empty())
            throw ParseError(where + ": 'kraus' must be a nonempty array of matrices");
        std::vector<ComplexMatrix> kraus;
        kraus.reserve(kraus_node.size());
        for (std::size_t k = 0; k < kraus_node.size(); ++k)
            kraus.push_back(
                read_matrix(kraus_node[k], dim, where + ".kraus[" + std::to_string(k) + "]"));
        instance.program.processes.emplace_back(dim, std::move(kraus));
        instance.program.process_names.push_back(std::move(name));
    }

    const Json& measurement = field(doc, "measurement", "program file");
    if (!measurement.is_object()) throw ParseError("program file: 'measurement' must be an object");
    instance.program.m0 = read_matrix(field(measurement, "m0", "measurement"), dim, "measurement.m0");
    instance.program.m1 = read_matrix(field(measurement, "m1", "measurement"), dim, "measurement.m1");

    const Json& state = field(doc, "initial_state", "program file");
    if (!state.is_object()) throw ParseError("program file: 'initial_state' must be an object");
    if (const auto it = state.find("pure"); it != state.end()) {
        instance.rho0_vector = read_vector(*it, dim, "initial_state.pure");
        const double norm = instance.rho0_vector.norm();
        if (norm <= 0.0) throw ValidationError("initial_state.pure: zero vector");
        if (std::abs(norm - 1.0) > tol.zero)
            throw ValidationError("initial_state.pure: vector norm " + std::to_string(norm) +
                                  " is not 1");
        instance.rho0_vector /= norm;
        instance.rho0 = instance.rho0_vector * instance.rho0_vector.adjoint();
        instance.rho0_is_pure = true;
    } else if (const auto dit = state.find("density"); dit != state.end()) {
        instance.rho0 = read_matrix(*dit, dim, "initial_state.density");
        if (!is_positive_semidefinite(instance.rho0, tol))
            throw ValidationError("initial_state.density: not positive-semidefinite");
        const double trace = instance.rho0.real().trace();
        if (std::abs(trace - 1.0) > tol.zero)
            throw ValidationError("initial_state.density: trace " + std::to_string(trace) +
                                  " is not 1");
        instance.rho0 /= trace;
    } else {
        throw ParseError("initial_state: expected 'pure' or 'density'");
    }

    const ProgramReport report = validate(instance.program, tol);
    if (!report.ok) {
        std::ostringstream oss;
        oss << "program fails validation:";
        for (const auto& check : report.checks)
            if (!check.ok) oss << " [" << check.what << " residual " << check.residual << "]";
        throw ValidationError(oss.str());
    }
    return instance;
}

}  // namespace

ProgramInstance parse_program_text(const std::string& text, const Tolerances& tol) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("<memory>: " + std::string(e.what()));
    }
    return parse_document(doc, tol);
}

ProgramInstance parse_program(const std::string& path, const Tolerances& tol) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + std::string(e.what()));
    }
    return parse_document(doc, tol);
}

Json json_complex(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json json_vector(const ComplexVector& v) {
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i) out.push_back(json_complex(v(i)));
    return out;
}

Json json_matrix(const ComplexMatrix& m) {
    Json out = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(json_complex(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

Json serialize_program(const ProgramInstance& instance) {
    Json doc;
    doc["dimension"] = instance.program.dim;
    Json processes = Json::array();
    for (std::size_t i = 0; i < instance.program.processes.size(); ++i) {
        Json proc;
        proc["name"] = instance.program.name_of(static_cast<int>(i + 1));
        Json kraus = Json::array();
        for (const auto& k : instance.program.processes[i].kraus())
            kraus.push_back(json_matrix(k));
        proc["kraus"] = std::move(kraus);
        processes.push_back(std::move(proc));
    }
    doc["processes"] = std::move(processes);
    doc["measurement"] = Json{{"m0", json_matrix(instance.program.m0)},
                              {"m1", json_matrix(instance.program.m1)}};
    if (instance.rho0_is_pure)
        doc["initial_state"] = Json{{"pure", json_vector(instance.rho0_vector)}};
    else
        doc["initial_state"] = Json{{"density", json_matrix(instance.rho0)}};
    return doc;
}

void write_program(const ProgramInstance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << serialize_program(instance).dump(2) << "\n";
}

}  // namespace qpv
