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

#include "qpv/matrix.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

#include "qpv/errors.hpp"

namespace qpv {

bool is_hermitian(const ComplexMatrix& a, const Tolerances& tol) {
    if (a.rows() != a.cols()) return false;
    const double scale = std::max(1.0, a.norm());
    return (a - a.adjoint()).norm() <= tol.herm * scale;
}

bool is_positive_semidefinite(const ComplexMatrix& a, const Tolerances& tol) {
    if (!is_hermitian(a, tol)) return false;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(a, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    if (ev.size() == 0) return true;
    const double lambda_max = ev.maxCoeff();
    return ev.minCoeff() >= -tol.psd * std::max(1.0, lambda_max);
}

bool loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerances& tol) {
    return is_positive_semidefinite(b - a, tol);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Index p = b.rows(), q = b.cols();
    ComplexMatrix out(a.rows() * p, a.cols() * q);
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) out.block(i * p, j * q, p, q) = a(i, j) * b;
    return out;
}

ComplexMatrix matrix_power(const ComplexMatrix& m, unsigned n) {
    if (m.rows() != m.cols()) throw DimensionMismatch("matrix_power: matrix must be square");
    ComplexMatrix result = ComplexMatrix::Identity(m.rows(), m.cols());
    ComplexMatrix base = m;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

double spectral_radius(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("spectral_radius: matrix must be square");
    if (m.rows() == 0) return 0.0;
    Eigen::ComplexEigenSolver<ComplexMatrix> es(m, /*computeEigenvectors=*/false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace qpv
