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

#include "qpv/fixtures.hpp"

#include <cmath>
#include <numbers>

#include "qpv/errors.hpp"

namespace qpv {

namespace {

ProgramInstance with_pure_state(Program program, ComplexVector psi) {
    ProgramInstance instance;
    instance.program = std::move(program);
    instance.rho0 = psi * psi.adjoint();
    instance.rho0_is_pure = true;
    instance.rho0_vector = std::move(psi);
    return instance;
}

}  // namespace

ProgramInstance example_walk() {
    const double s = 1.0 / std::sqrt(3.0);
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Complex w2 = w * w;

    ComplexMatrix walk1(3, 3), walk2(3, 3);
    walk1 << s, s, s,
             s, s * w, s * w2,
             s, s * w2, s * w;
    walk2 << s, s, s,
             s, s * w2, s * w,
             s, s * w, s * w2;

    ComplexMatrix m0 = ComplexMatrix::Zero(3, 3);
    m0(2, 2) = 1.0;
    ComplexMatrix m1 = ComplexMatrix::Identity(3, 3) - m0;

    Program p;
    p.dim = 3;
    p.processes = {SuperOperator::conjugation(walk1), SuperOperator::conjugation(walk2)};
    p.process_names = {"walk1", "walk2"};
    p.m0 = std::move(m0);
    p.m1 = std::move(m1);

    ComplexVector psi = ComplexVector::Zero(3);
    psi(0) = 1.0;
    return with_pure_state(std::move(p), std::move(psi));
}

ProgramInstance example_flip() {
    ComplexMatrix flip(2, 2);
    flip << 0, 1,
            1, 0;
    ComplexMatrix m0 = ComplexMatrix::Zero(2, 2);
    m0(1, 1) = 1.0;
    ComplexMatrix m1 = ComplexMatrix::Zero(2, 2);
    m1(0, 0) = 1.0;

    Program p;
    p.dim = 2;
    p.processes = {SuperOperator::conjugation(flip)};
    p.process_names = {"flip"};
    p.m0 = std::move(m0);
    p.m1 = std::move(m1);

    ComplexVector psi = ComplexVector::Zero(2);
    psi(0) = 1.0;
    return with_pure_state(std::move(p), std::move(psi));
}

ProgramInstance example_identity() {
    Program p;
    p.dim = 2;
    p.processes = {SuperOperator::identity(2)};
    p.process_names = {"id"};
    p.m0 = ComplexMatrix::Zero(2, 2);
    p.m1 = ComplexMatrix::Identity(2, 2);

    ComplexVector psi = ComplexVector::Zero(2);
    psi(0) = 1.0;
    return with_pure_state(std::move(p), std::move(psi));
}

ProgramInstance example_by_name(const std::string& name) {
    if (name == "walk") return example_walk();
    if (name == "flip") return example_flip();
    if (name == "identity") return example_identity();
    throw UnknownProcess("no bundled example named '" + name + "'");
}

}  // namespace qpv
