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

#include "qpv/superop.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <utility>

namespace qpv {

SuperOperator::SuperOperator(Index dim, std::vector<ComplexMatrix> kraus)
    : dim_(dim), kraus_(std::move(kraus)) {
    if (dim_ <= 0) throw DimensionMismatch("SuperOperator: dimension must be positive");
    if (kraus_.empty()) throw DimensionMismatch("SuperOperator: Kraus list must be nonempty");
    for (const auto& k : kraus_)
        if (k.rows() != dim_ || k.cols() != dim_)
            throw DimensionMismatch("SuperOperator: Kraus operator of wrong shape");
}

SuperOperator SuperOperator::conjugation(const ComplexMatrix& op) {
    if (op.rows() != op.cols())
        throw DimensionMismatch("SuperOperator::conjugation: operator must be square");
    return SuperOperator(op.rows(), {op});
}

SuperOperator SuperOperator::identity(Index dim) {
    return SuperOperator(dim, {ComplexMatrix::Identity(dim, dim)});
}

SuperOperator SuperOperator::zero(Index dim) {
    return SuperOperator(dim, {ComplexMatrix::Zero(dim, dim)});
}

ComplexMatrix SuperOperator::kraus_gram() const {
    ComplexMatrix g = ComplexMatrix::Zero(dim_, dim_);
    for (const auto& k : kraus_) g += k.adjoint() * k;
    return g;
}

ComplexMatrix SuperOperator::apply(const ComplexMatrix& a) const {
    if (a.rows() != dim_ || a.cols() != dim_)
        throw DimensionMismatch("SuperOperator::apply: state of wrong shape");
    ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
    for (const auto& k : kraus_) out += k * a * k.adjoint();
    return out;
}

ComplexMatrix apply(const SuperOperator& e, const ComplexMatrix& a) { return e.apply(a); }

ComplexVector vec(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("vec: matrix must be square");
    const Index d = a.rows();
    ComplexVector x(d * d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) x(i * d + j) = a(i, j);
    return x;
}

ComplexMatrix unvec(const ComplexVector& x) {
    const auto d = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(x.size()))));
    if (d * d != x.size()) throw DimensionMismatch("unvec: length is not a perfect square");
    ComplexMatrix a(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) a(i, j) = x(i * d + j);
    return a;
}

MatrixRep matrix_rep(const SuperOperator& e) {
    const Index d = e.dim();
    ComplexMatrix m = ComplexMatrix::Zero(d * d, d * d);
    for (const auto& k : e.kraus()) m += kron(k, k.conjugate());
    return MatrixRep{d, std::move(m)};
}

SuperOperator dual(const SuperOperator& e) {
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(e.kraus_count());
    for (const auto& k : e.kraus()) kraus.push_back(k.adjoint());
    return SuperOperator(e.dim(), std::move(kraus));
}

namespace {

/// supp(E(P_X)), with the zero case decided at the map's own scale: when the
/// true value of E(P_X) is the zero operator, the computed matrix is rounding
/// noise that a purely relative rank cutoff would happily keep. tr(E(P_X))
/// can reach max_trace_factor(E) * dim(X), so anything at or below the zero
/// tolerance times that bound is the zero subspace.
Subspace support_of_applied_projector(const SuperOperator& e, const Subspace& x,
                                      const Tolerances& tol) {
    const ComplexMatrix applied = e.apply(x.projector());
    const double attainable =
        max_trace_factor(e) * static_cast<double>(std::max<Index>(x.dim(), 1));
    if (applied.real().trace() <= tol.zero * std::max(attainable, 1e-300))
        return Subspace(e.dim());
    return support(applied, tol);
}

}  // namespace

Subspace image(const SuperOperator& e, const Subspace& x, const Tolerances& tol) {
    if (e.dim() != x.ambient_dim())
        throw DimensionMismatch("image: operator and subspace dimensions differ");
    return support_of_applied_projector(e, x, tol);
}

Subspace preimage(const SuperOperator& e, const Subspace& x, const Tolerances& tol) {
    if (e.dim() != x.ambient_dim())
        throw DimensionMismatch("preimage: operator and subspace dimensions differ");
    const Subspace reached = support_of_applied_projector(dual(e), orthocomplement(x), tol);
    return orthocomplement(reached);
}

ChannelReport validate_channel(const SuperOperator& e, const Tolerances& tol) {
    ChannelReport report;
    const ComplexMatrix gram = e.kraus_gram();
    const ComplexMatrix eye = ComplexMatrix::Identity(e.dim(), e.dim());
    report.completeness_residual = (gram - eye).norm();
    report.trace_preserving = report.completeness_residual <= tol.measurement;
    report.trace_nonincreasing = loewner_leq(gram, eye, tol);
    report.max_eig_modulus = spectral_radius(matrix_rep(e).matrix);
    return report;
}

namespace {

SuperOperator maybe_canonicalize(SuperOperator e, const Tolerances& tol) {
    const auto limit = static_cast<std::size_t>(4 * e.dim() * e.dim());
    if (e.kraus_count() > limit) return canonicalize(e, tol);
    return e;
}

}  // namespace

SuperOperator compose(const SuperOperator& outer, const SuperOperator& inner,
                      const Tolerances& tol) {
    if (outer.dim() != inner.dim())
        throw DimensionMismatch("compose: operator dimensions differ");
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(outer.kraus_count() * inner.kraus_count());
    for (const auto& o : outer.kraus())
        for (const auto& i : inner.kraus()) kraus.push_back(o * i);
    return maybe_canonicalize(SuperOperator(outer.dim(), std::move(kraus)), tol);
}

SuperOperator sum(const std::vector<SuperOperator>& ops, const Tolerances& tol) {
    if (ops.empty()) throw DimensionMismatch("sum: empty operator list");
    const Index d = ops.front().dim();
    std::vector<ComplexMatrix> kraus;
    for (const auto& op : ops) {
        if (op.dim() != d) throw DimensionMismatch("sum: operator dimensions differ");
        kraus.insert(kraus.end(), op.kraus().begin(), op.kraus().end());
    }
    return maybe_canonicalize(SuperOperator(d, std::move(kraus)), tol);
}

SuperOperator scale(const SuperOperator& e, double p) {
    if (!(p > 0.0)) throw NonPositiveScale("scale: factor must be positive");
    const double root = std::sqrt(p);
    std::vector<ComplexMatrix> kraus;
    kraus.reserve(e.kraus_count());
    for (const auto& k : e.kraus()) kraus.push_back(root * k);
    return SuperOperator(e.dim(), std::move(kraus));
}

double max_trace_factor(const SuperOperator& e) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(e.kraus_gram(), Eigen::EigenvaluesOnly);
    return std::max(0.0, es.eigenvalues().maxCoeff());
}

SuperOperator canonicalize(const SuperOperator& e, const Tolerances& tol) {
    const Index d = e.dim();
    // Choi matrix in the row-stacking convention: C = sum_i vec(K_i) vec(K_i)^dag.
    // It determines the action of the map, so any eigen-decomposition of it
    // yields an equivalent Kraus list of length <= d^2.
    ComplexMatrix choi = ComplexMatrix::Zero(d * d, d * d);
    for (const auto& k : e.kraus()) {
        const ComplexVector v = vec(k);
        choi += v * v.adjoint();
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(choi);
    if (es.info() != Eigen::Success)
        throw InternalError("canonicalize: Choi eigendecomposition failed");
    const auto& ev = es.eigenvalues();
    const double lambda_max = ev.size() > 0 ? std::max(0.0, ev.maxCoeff()) : 0.0;
    const double cutoff = tol.choi_rel * lambda_max;

    std::vector<ComplexMatrix> kraus;
    for (Index i = 0; i < ev.size(); ++i)
        if (ev(i) > cutoff && ev(i) > 0.0)
            kraus.push_back(std::sqrt(ev(i)) * unvec(es.eigenvectors().col(i)));
    if (kraus.empty()) kraus.push_back(ComplexMatrix::Zero(d, d));
    return SuperOperator(d, std::move(kraus));
}

}  // namespace qpv
