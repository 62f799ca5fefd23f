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

#include <vector>

#include "qpv/config.hpp"
#include "qpv/matrix.hpp"
#include "qpv/subspace.hpp"

namespace qpv {

/// Support of a positive-semidefinite operator: the span of its eigenvectors
/// whose eigenvalue exceeds rank_rel * (largest eigenvalue). The relative
/// cutoff makes the result invariant under positive scaling of rho.
///
/// Throws NotHermitian / NotPositive when rho fails the preconditions beyond
/// tolerance.
Subspace support(const ComplexMatrix& rho, const Tolerances& tol = Tolerances{});

/// Smallest subspace containing both arguments.
Subspace join(const Subspace& x, const Subspace& y, const Tolerances& tol = Tolerances{});

/// Orthocomplement; dim X + dim X^perp = ambient_dim exactly by construction.
Subspace orthocomplement(const Subspace& x);

/// Orthonormal basis of the span of arbitrary vectors (modified Gram-Schmidt
/// with reorthogonalization). Vectors whose residual after projection is
/// <= rank_rel * (largest input norm) are dropped.
Subspace orthonormalize(Index ambient_dim, const std::vector<ComplexVector>& vectors,
                        const Tolerances& tol = Tolerances{});

/// Ambient dimension inferred from the first vector. Throws EmptyAmbient for
/// an empty list or zero-length vectors.
Subspace orthonormalize(const std::vector<ComplexVector>& vectors,
                        const Tolerances& tol = Tolerances{});

/// ||P_X - P_Y||_F <= subspace tolerance.
bool subspace_eq(const Subspace& x, const Subspace& y, const Tolerances& tol = Tolerances{});

/// X <= Y iff P_Y P_X = P_X within tolerance.
bool subspace_leq(const Subspace& x, const Subspace& y, const Tolerances& tol = Tolerances{});

}  // namespace qpv
