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

#include <doctest.h>

#include <cmath>

#include "qpv/linalg.hpp"
#include "support/generators.hpp"

using namespace qpv;
using testing::Rng;

namespace {

Subspace span_of(std::vector<ComplexVector> vectors) { return orthonormalize(vectors); }

ComplexVector basis_vec(Index d, Index i) {
    ComplexVector v = ComplexVector::Zero(d);
    v(i) = 1.0;
    return v;
}

Subspace random_subspace(Index d, Index k, Rng& rng) {
    std::vector<ComplexVector> vecs;
    for (Index i = 0; i < k; ++i) vecs.push_back(testing::random_ginibre(d, 1, rng).col(0));
    return orthonormalize(d, vecs);
}

}  // namespace

TEST_CASE("support of a diagonal operator keeps the nonzero directions") {
    ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
    rho(0, 0) = 0.5;
    rho(1, 1) = 0.5;
    const Subspace s = support(rho);
    CHECK(s.dim() == 2);
    CHECK(subspace_eq(s, span_of({basis_vec(3, 0), basis_vec(3, 1)})));
}

TEST_CASE("support of the zero operator is the zero subspace") {
    const Subspace s = support(ComplexMatrix::Zero(3, 3));
    CHECK(s.dim() == 0);
    CHECK(s.ambient_dim() == 3);
}

TEST_CASE("support of a rank-1 projector is its ray") {
    ComplexVector plus(2);
    plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    const Subspace s = support(plus * plus.adjoint());
    CHECK(s.dim() == 1);
    CHECK(subspace_eq(s, span_of({plus})));
}

TEST_CASE("support rejects bad inputs") {
    ComplexMatrix skew(2, 2);
    skew << 0.0, 1.0,
            0.0, 0.0;
    CHECK_THROWS_AS(support(skew), NotHermitian);

    ComplexMatrix indefinite = ComplexMatrix::Zero(2, 2);
    indefinite(0, 0) = 1.0;
    indefinite(1, 1) = -1.0;
    CHECK_THROWS_AS(support(indefinite), NotPositive);
}

TEST_CASE("support dimension equals the construction rank of a random PSD") {
    Rng rng(11);
    for (Index d = 2; d <= 5; ++d)
        for (Index r = 0; r <= d; ++r) {
            ComplexMatrix rho = ComplexMatrix::Zero(d, d);
            if (r > 0) {
                const ComplexMatrix g = testing::random_ginibre(d, r, rng);
                rho = g * g.adjoint();
            }
            CHECK(support(rho).dim() == r);
        }
}

TEST_CASE("join spans the union") {
    const Subspace e0 = span_of({basis_vec(2, 0)});
    const Subspace e1 = span_of({basis_vec(2, 1)});
    CHECK(join(e0, e1).dim() == 2);
    CHECK(subspace_eq(join(e0, e0), e0));

    ComplexVector plus(2);
    plus << 1.0, 1.0;
    CHECK(join(span_of({plus}), e0).dim() == 2);

    CHECK_THROWS_AS(join(e0, span_of({basis_vec(3, 0)})), DimensionMismatch);
}

TEST_CASE("join is associative, commutative and idempotent") {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Subspace a = random_subspace(4, 1 + trial % 2, rng);
        const Subspace b = random_subspace(4, 1 + (trial / 2) % 2, rng);
        const Subspace c = random_subspace(4, 1, rng);
        CHECK(subspace_eq(join(a, b), join(b, a)));
        CHECK(subspace_eq(join(join(a, b), c), join(a, join(b, c))));
        CHECK(subspace_eq(join(a, a), a));
    }
}

TEST_CASE("orthocomplement examples and involution") {
    const Subspace e0 = span_of({basis_vec(2, 0)});
    CHECK(subspace_eq(orthocomplement(e0), span_of({basis_vec(2, 1)})));
    CHECK(orthocomplement(Subspace::full(3)).dim() == 0);
    CHECK(orthocomplement(Subspace(3)).dim() == 3);

    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Subspace x = random_subspace(5, 1 + trial % 4, rng);
        CHECK(x.dim() + orthocomplement(x).dim() == 5);
        CHECK(subspace_eq(orthocomplement(orthocomplement(x)), x));
        const ComplexMatrix sum = x.projector() + orthocomplement(x).projector();
        CHECK((sum - ComplexMatrix::Identity(5, 5)).norm() < 1e-8);
    }
}

TEST_CASE("orthonormalize drops dependent and zero vectors") {
    ComplexVector a(2), b(2), c(2);
    a << 1.0, 0.0;
    b << 1.0, 1.0;
    c << 2.0, 0.0;
    CHECK(orthonormalize({a, b}).dim() == 2);

    const Subspace collinear = orthonormalize({a, c});
    CHECK(collinear.dim() == 1);
    CHECK(subspace_eq(collinear, span_of({a})));

    CHECK(orthonormalize(2, {ComplexVector::Zero(2)}).dim() == 0);
    CHECK(orthonormalize(3, {}).dim() == 0);
    CHECK_THROWS_AS(orthonormalize({}), EmptyAmbient);
    CHECK_THROWS_AS(orthonormalize(0, {}), EmptyAmbient);
}

TEST_CASE("orthonormalized bases satisfy the Gram invariant") {
    Rng rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ComplexVector> vecs;
        for (int i = 0; i < 6; ++i) vecs.push_back(testing::random_ginibre(4, 1, rng).col(0));
        const Subspace s = orthonormalize(4, vecs);
        CHECK(s.dim() == 4);
        CHECK(s.orthonormality_residual() < 1e-10);
    }
}

TEST_CASE("subspace comparison is phase-invariant") {
    const Subspace e0 = span_of({basis_vec(2, 0)});
    const Subspace full = Subspace::full(2);
    CHECK(subspace_leq(e0, full));
    CHECK(!subspace_leq(full, e0));

    ComplexVector rotated(2);
    rotated << std::polar(1.0, 0.7), 0.0;
    CHECK(subspace_eq(e0, span_of({rotated})));
    CHECK(!subspace_eq(e0, span_of({basis_vec(2, 1)})));

    CHECK_THROWS_AS(subspace_eq(e0, Subspace::full(3)), DimensionMismatch);
    CHECK_THROWS_AS(subspace_leq(e0, Subspace::full(3)), DimensionMismatch);
}

TEST_CASE("support algebra: scaling, monotonicity, additivity") {
    Rng rng(15);
    std::uniform_real_distribution<double> positive(1e-3, 10.0);
    for (int trial = 0; trial < 25; ++trial) {
        const Index d = 2 + trial % 3;
        const ComplexMatrix rho = testing::random_density(d, rng, 1 + trial % d);
        const ComplexMatrix sigma = testing::random_density(d, rng, 1 + (trial / 2) % d);

        CHECK(subspace_eq(support(positive(rng) * rho), support(rho)));
        CHECK(subspace_leq(support(rho), support(rho + sigma)));
        CHECK(subspace_eq(support(rho + sigma), join(support(rho), support(sigma))));
    }
}
