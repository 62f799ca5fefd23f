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

#include "qpv/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>

#include "qpv/errors.hpp"

namespace qpv {

Subspace support(const ComplexMatrix& rho, const Tolerances& tol) {
    if (rho.rows() != rho.cols()) throw DimensionMismatch("support: operator must be square");
    const double scale = std::max(1.0, rho.norm());
    if ((rho - rho.adjoint()).norm() > tol.herm * scale)
        throw NotHermitian("support: operator is not Hermitian within tolerance");

    // Symmetrize before diagonalizing so rounding in the input cannot leak
    // into the eigenbasis.
    const ComplexMatrix sym = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(sym);
    if (es.info() != Eigen::Success)
        throw InternalError("support: Hermitian eigendecomposition failed");

    const auto& ev = es.eigenvalues();
    const Index d = rho.rows();
    const double lambda_max = ev.size() > 0 ? ev.maxCoeff() : 0.0;
    if (ev.size() > 0 && ev.minCoeff() < -tol.psd * std::max(1.0, lambda_max))
        throw NotPositive("support: operator is not positive-semidefinite within tolerance");

    const double cutoff = tol.rank_rel * lambda_max;
    std::vector<Index> keep;
    for (Index i = 0; i < ev.size(); ++i)
        if (ev(i) > cutoff) keep.push_back(i);

    ComplexMatrix basis(d, static_cast<Index>(keep.size()));
    for (Index j = 0; j < basis.cols(); ++j) basis.col(j) = es.eigenvectors().col(keep[j]);
    return Subspace::from_orthonormal(std::move(basis));
}

Subspace orthonormalize(Index ambient_dim, const std::vector<ComplexVector>& vectors,
                        const Tolerances& tol) {
    if (ambient_dim <= 0) throw EmptyAmbient("orthonormalize: ambient dimension is zero");
    double max_norm = 0.0;
    for (const auto& v : vectors) {
        if (v.size() != ambient_dim)
            throw DimensionMismatch("orthonormalize: vectors of mixed dimension");
        max_norm = std::max(max_norm, v.norm());
    }
    const double cutoff = tol.rank_rel * max_norm;

    ComplexMatrix basis(ambient_dim, 0);
    for (const auto& v : vectors) {
        ComplexVector w = v;
        // Two projection passes: plain MGS loses orthogonality when the
        // residual is small relative to the input.
        for (int pass = 0; pass < 2; ++pass)
            for (Index j = 0; j < basis.cols(); ++j) w -= basis.col(j).dot(w) * basis.col(j);
        const double n = w.norm();
        if (n > cutoff) {
            basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
            basis.col(basis.cols() - 1) = w / n;
        }
    }
    return Subspace::from_orthonormal(std::move(basis));
}

Subspace orthonormalize(const std::vector<ComplexVector>& vectors, const Tolerances& tol) {
    if (vectors.empty() || vectors.front().size() == 0)
        throw EmptyAmbient("orthonormalize: cannot infer a nonzero ambient dimension");
    return orthonormalize(vectors.front().size(), vectors, tol);
}

Subspace join(const Subspace& x, const Subspace& y, const Tolerances& tol) {
    if (x.ambient_dim() != y.ambient_dim())
        throw DimensionMismatch("join: subspaces of different ambient dimension");
    std::vector<ComplexVector> vecs;
    vecs.reserve(x.dim() + y.dim());
    for (Index j = 0; j < x.dim(); ++j) vecs.push_back(x.basis().col(j));
    for (Index j = 0; j < y.dim(); ++j) vecs.push_back(y.basis().col(j));
    return orthonormalize(x.ambient_dim(), vecs, tol);
}

Subspace orthocomplement(const Subspace& x) {
    const Index d = x.ambient_dim();
    const Index k = x.dim();
    if (k == 0) return Subspace::full(d);
    if (k == d) return Subspace(d);
    // Complete the basis to a unitary; the trailing columns span X^perp and
    // the dimension count d - k is exact by construction.
    Eigen::HouseholderQR<ComplexMatrix> qr(x.basis());
    ComplexMatrix q = qr.householderQ();
    return Subspace::from_orthonormal(q.rightCols(d - k));
}

bool subspace_eq(const Subspace& x, const Subspace& y, const Tolerances& tol) {
    if (x.ambient_dim() != y.ambient_dim())
        throw DimensionMismatch("subspace_eq: subspaces of different ambient dimension");
    return (x.projector() - y.projector()).norm() <= tol.subspace;
}

bool subspace_leq(const Subspace& x, const Subspace& y, const Tolerances& tol) {
    if (x.ambient_dim() != y.ambient_dim())
        throw DimensionMismatch("subspace_leq: subspaces of different ambient dimension");
    const ComplexMatrix px = x.projector();
    return (y.projector() * px - px).norm() <= tol.subspace;
}

}  // namespace qpv
