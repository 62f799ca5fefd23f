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

#include <utility>

#include "qpv/errors.hpp"
#include "qpv/matrix.hpp"

namespace qpv {

/// A subspace of a finite-dimensional complex state space, stored as an
/// orthonormal basis (the columns of a dim x k matrix). The basis form is
/// canonical; projectors are derived on demand.
class Subspace {
  public:
    /// The zero subspace {0} of the given ambient dimension.
    explicit Subspace(Index ambient_dim)
        : ambient_(ambient_dim), basis_(ComplexMatrix::Zero(ambient_dim, 0)) {
        if (ambient_dim < 0) throw DimensionMismatch("subspace: negative ambient dimension");
    }

    /// Wraps columns that are already mutually orthonormal. Callers that
    /// hold raw spanning vectors go through orthonormalize() instead.
    static Subspace from_orthonormal(ComplexMatrix basis) {
        Subspace s(basis.rows());
        s.basis_ = std::move(basis);
        return s;
    }

    static Subspace full(Index ambient_dim) {
        return from_orthonormal(ComplexMatrix::Identity(ambient_dim, ambient_dim));
    }

    Index ambient_dim() const { return ambient_; }
    Index dim() const { return basis_.cols(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// dim x dim orthonormal basis matrix (columns are the basis vectors).
    const ComplexMatrix& basis() const { return basis_; }

    /// P = B B^dag; idempotent and Hermitian within tolerance.
    ComplexMatrix projector() const { return basis_ * basis_.adjoint(); }

    /// Gram-matrix residual ||B^dag B - I||_F; the stored-basis invariant
    /// holds when this is <= the orthonormality tolerance.
    double orthonormality_residual() const {
        return (basis_.adjoint() * basis_ - ComplexMatrix::Identity(dim(), dim())).norm();
    }

  private:
    Index ambient_;
    ComplexMatrix basis_;
};

}  // namespace qpv
