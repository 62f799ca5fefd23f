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
#include "qpv/errors.hpp"
#include "qpv/linalg.hpp"
#include "qpv/matrix.hpp"
#include "qpv/subspace.hpp"

namespace qpv {

/// A completely positive map in Kraus form, rho |-> sum_i K_i rho K_i^dag.
/// Trace-nonincreasing (sum_i K_i^dag K_i <= I) for every map this library
/// constructs from valid programs; the predicate is checkable, not assumed.
class SuperOperator {
  public:
    SuperOperator(Index dim, std::vector<ComplexMatrix> kraus);

    /// The map rho |-> U rho U^dag (or M rho M^dag for non-unitary M).
    static SuperOperator conjugation(const ComplexMatrix& op);

    static SuperOperator identity(Index dim);
    static SuperOperator zero(Index dim);

    Index dim() const { return dim_; }
    const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
    std::size_t kraus_count() const { return kraus_.size(); }

    /// sum_i K_i^dag K_i.
    ComplexMatrix kraus_gram() const;

    ComplexMatrix apply(const ComplexMatrix& a) const;

  private:
    Index dim_;
    std::vector<ComplexMatrix> kraus_;
};

/// The dim^2 x dim^2 matrix M = sum_i K_i (x) K_i^* acting on row-stacked
/// states: M * vec(A) = vec(E(A)).
struct MatrixRep {
    Index dim = 0;
    ComplexMatrix matrix;
};

struct ChannelReport {
    bool trace_preserving = false;
    bool trace_nonincreasing = false;
    double completeness_residual = 0.0;  // ||sum K_i^dag K_i - I||_F
    double max_eig_modulus = 0.0;        // spectral radius of the matrix representation
};

/// Row-stacking vectorization: vec(A)[i*d + j] = A(i, j).
ComplexVector vec(const ComplexMatrix& a);
ComplexMatrix unvec(const ComplexVector& x);

ComplexMatrix apply(const SuperOperator& e, const ComplexMatrix& a);

MatrixRep matrix_rep(const SuperOperator& e);

/// Heisenberg-picture adjoint: Kraus list {K_i^dag}. Satisfies
/// tr(E(A) B) = tr(A E*(B)).
SuperOperator dual(const SuperOperator& e);

/// Image of a subspace: supp(E(P_X)).
Subspace image(const SuperOperator& e, const Subspace& x, const Tolerances& tol = Tolerances{});

/// Pre-image: the largest subspace every vector of which E maps into X,
/// computed as [supp(E*(P_{X^perp}))]^perp.
Subspace preimage(const SuperOperator& e, const Subspace& x, const Tolerances& tol = Tolerances{});

ChannelReport validate_channel(const SuperOperator& e, const Tolerances& tol = Tolerances{});

/// outer after inner: Kraus products {outer_j * inner_i}, so
/// compose(F, E).apply(A) == F.apply(E.apply(A)).
/// Results whose Kraus list exceeds 4*dim^2 are canonicalized automatically.
SuperOperator compose(const SuperOperator& outer, const SuperOperator& inner,
                      const Tolerances& tol = Tolerances{});

/// Pointwise sum: Kraus lists concatenated, same auto-canonicalization rule.
SuperOperator sum(const std::vector<SuperOperator>& ops, const Tolerances& tol = Tolerances{});

/// p * E for p > 0: each Kraus operator multiplied by sqrt(p).
SuperOperator scale(const SuperOperator& e, double p);

/// Re-extracts at most dim^2 Kraus operators from the eigendecomposition of
/// the Choi matrix. The action of the map is preserved; the particular Kraus
/// decomposition is not.
SuperOperator canonicalize(const SuperOperator& e, const Tolerances& tol = Tolerances{});

/// Largest achievable one-step trace ratio sup_rho tr(E(rho))/tr(rho), i.e.
/// the top eigenvalue of sum_i K_i^dag K_i. The reference scale for
/// deciding whether an application has collapsed a state to zero.
double max_trace_factor(const SuperOperator& e);

}  // namespace qpv
