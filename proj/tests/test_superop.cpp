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

#include "qpv/fixtures.hpp"
#include "qpv/superop.hpp"
#include "support/generators.hpp"

using namespace qpv;
using testing::Rng;

namespace {

/// Independent evaluation of sum_i K_i A K_i^dag by explicit index loops;
/// shares no code path with SuperOperator::apply.
ComplexMatrix naive_apply(const std::vector<ComplexMatrix>& kraus, const ComplexMatrix& a) {
    const Index d = a.rows();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (const auto& k : kraus)
        for (Index p = 0; p < d; ++p)
            for (Index q = 0; q < d; ++q) {
                Complex acc = 0.0;
                for (Index r = 0; r < d; ++r)
                    for (Index s = 0; s < d; ++s) acc += k(p, r) * a(r, s) * std::conj(k(q, s));
                out(p, q) += acc;
            }
    return out;
}

ComplexMatrix pauli_x() {
    ComplexMatrix x(2, 2);
    x << 0, 1,
         1, 0;
    return x;
}

}  // namespace

TEST_CASE("apply: identity channel, unitary conjugation, reset channel") {
    Rng rng(21);
    const ComplexMatrix a = testing::random_density(2, rng);
    CHECK((SuperOperator::identity(2).apply(a) - a).norm() < 1e-14);

    ComplexMatrix e00 = ComplexMatrix::Zero(2, 2);
    e00(0, 0) = 1.0;
    ComplexMatrix e11 = ComplexMatrix::Zero(2, 2);
    e11(1, 1) = 1.0;
    CHECK((SuperOperator::conjugation(pauli_x()).apply(e00) - e11).norm() < 1e-14);

    // Reset-to-first-site channel: kraus {|0><0|, |0><1|}.
    ComplexMatrix k0 = ComplexMatrix::Zero(2, 2), k1 = ComplexMatrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k1(0, 1) = 1.0;
    const SuperOperator reset(2, {k0, k1});
    ComplexMatrix mixed = ComplexMatrix::Zero(2, 2);
    mixed(0, 0) = 0.3;
    mixed(1, 1) = 0.7;
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    CHECK((reset.apply(mixed) - expected).norm() < 1e-14);
    CHECK((reset.apply(mixed) - naive_apply(reset.kraus(), mixed)).norm() < 1e-13);

    CHECK_THROWS_AS(reset.apply(ComplexMatrix::Identity(3, 3)), DimensionMismatch);
}

TEST_CASE("apply preserves positivity and does not raise the trace") {
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const Index d = 2 + trial % 3;
        const SuperOperator e = testing::random_subchannel(d, rng);
        const ComplexMatrix rho = testing::random_density(d, rng);
        const ComplexMatrix out = e.apply(rho);
        CHECK(is_positive_semidefinite(out));
        CHECK(out.real().trace() <= rho.real().trace() + 1e-10);
        CHECK((out - naive_apply(e.kraus(), rho)).norm() < 1e-12);
    }
}

TEST_CASE("matrix_rep assembles the Kronecker sum") {
    CHECK((matrix_rep(SuperOperator::identity(2)).matrix - ComplexMatrix::Identity(4, 4)).norm() <
          1e-14);

    const ComplexMatrix x = pauli_x();
    CHECK((matrix_rep(SuperOperator::conjugation(x)).matrix - kron(x, x)).norm() < 1e-14);

    const auto walk = example_walk();
    const ComplexMatrix w1 = walk.program.processes[0].kraus()[0];
    const MatrixRep rep = matrix_rep(walk.program.processes[0]);
    CHECK(rep.matrix.rows() == 9);
    CHECK((rep.matrix - kron(w1, w1.conjugate())).norm() < 1e-14);
}

TEST_CASE("vec and unvec are mutually inverse row-stackers") {
    ComplexVector expected(4);
    expected << 1.0, 0.0, 0.0, 1.0;
    CHECK((vec(ComplexMatrix::Identity(2, 2)) - expected).norm() < 1e-15);

    Rng rng(23);
    const ComplexMatrix a = testing::random_ginibre(3, 3, rng);
    CHECK((unvec(vec(a)) - a).norm() < 1e-15);
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 3; ++j) CHECK(vec(a)(i * 3 + j) == a(i, j));
}

TEST_CASE("the matrix representation acts as the map on vectorized states") {
    Rng rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const Index d = 2 + trial % 3;
        const SuperOperator e = trial % 2 == 0 ? testing::random_channel(d, 2, rng)
                                               : testing::random_subchannel(d, rng);
        const ComplexMatrix a = testing::random_ginibre(d, d, rng);
        const ComplexVector lhs = matrix_rep(e).matrix * vec(a);
        const ComplexVector rhs = vec(e.apply(a));
        CHECK((lhs - rhs).norm() <= 1e-10);
    }
}

TEST_CASE("trace-nonincreasing maps have spectral radius at most 1") {
    Rng rng(25);
    for (int trial = 0; trial < 40; ++trial) {
        const Index d = 2 + trial % 3;
        const SuperOperator e = trial % 2 == 0 ? testing::random_channel(d, 1 + trial % 3, rng)
                                               : testing::random_subchannel(d, rng);
        CHECK(spectral_radius(matrix_rep(e).matrix) <= 1.0 + 1e-10);
    }
}

TEST_CASE("dual: involution of action, unitary case, trace duality") {
    const SuperOperator id = SuperOperator::identity(2);
    CHECK((dual(id).kraus()[0] - ComplexMatrix::Identity(2, 2)).norm() < 1e-15);

    Rng rng(26);
    for (int trial = 0; trial < 15; ++trial) {
        const Index d = 2 + trial % 2;
        const SuperOperator e = testing::random_channel(d, 2, rng);
        const ComplexMatrix a = testing::random_ginibre(d, d, rng);
        const ComplexMatrix b = testing::random_ginibre(d, d, rng);

        CHECK((dual(dual(e)).apply(a) - e.apply(a)).norm() < 1e-12);

        const Complex lhs = (e.apply(a) * b).trace();
        const Complex rhs = (a * dual(e).apply(b)).trace();
        CHECK(std::abs(lhs - rhs) <= 1e-10);
    }

    const ComplexMatrix u = testing::random_unitary(3, rng);
    const ComplexMatrix a = testing::random_ginibre(3, 3, rng);
    CHECK((dual(SuperOperator::conjugation(u)).apply(a) - u.adjoint() * a * u).norm() < 1e-12);
}

TEST_CASE("image: identity, flip, monotonicity") {
    std::vector<ComplexVector> e0 = {ComplexVector::Unit(2, 0)};
    const Subspace x = orthonormalize(2, e0);
    CHECK(subspace_eq(image(SuperOperator::identity(2), x), x));
    CHECK(subspace_eq(image(SuperOperator::conjugation(pauli_x()), x),
                      orthonormalize(2, {ComplexVector::Unit(2, 1)})));

    Rng rng(27);
    for (int trial = 0; trial < 15; ++trial) {
        const Index d = 3;
        const SuperOperator e = testing::random_subchannel(d, rng);
        std::vector<ComplexVector> small_vecs = {testing::random_ginibre(d, 1, rng).col(0)};
        const Subspace small = orthonormalize(d, small_vecs);
        std::vector<ComplexVector> big_vecs = small_vecs;
        big_vecs.push_back(testing::random_ginibre(d, 1, rng).col(0));
        const Subspace big = orthonormalize(d, big_vecs);
        CHECK(subspace_leq(image(e, small), image(e, big)));
    }
}

TEST_CASE("preimage maps every contained ray into the target") {
    std::vector<ComplexVector> e0 = {ComplexVector::Unit(2, 0)};
    const Subspace x = orthonormalize(2, e0);
    CHECK(subspace_eq(preimage(SuperOperator::identity(2), x), x));
    CHECK(subspace_eq(preimage(SuperOperator::conjugation(pauli_x()), x),
                      orthonormalize(2, {ComplexVector::Unit(2, 1)})));

    Rng rng(28);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const Index d = 3;
        const SuperOperator e = testing::random_subchannel(d, rng);
        const Subspace target = support(testing::random_density(d, rng, 2));
        const Subspace pre = preimage(e, target);
        if (pre.is_zero()) continue;
        for (int sample = 0; sample < 200; ++sample) {
            ComplexVector coeff = testing::random_ginibre(pre.dim(), 1, rng).col(0);
            ComplexVector psi = pre.basis() * coeff;
            psi /= psi.norm();
            const ComplexMatrix out = e.apply(psi * psi.adjoint());
            if (out.norm() < 1e-14) continue;  // annihilated rays trivially land anywhere
            CHECK(subspace_leq(support(out), target));
        }
    }
}

TEST_CASE("validate_channel reports the right flags") {
    const ChannelReport id_report = validate_channel(SuperOperator::identity(2));
    CHECK(id_report.trace_preserving);
    CHECK(id_report.trace_nonincreasing);
    CHECK(id_report.max_eig_modulus == doctest::Approx(1.0).epsilon(1e-10));

    const auto walk = example_walk();
    CHECK(validate_channel(walk.program.processes[0]).trace_preserving);

    const ChannelReport proj_report =
        validate_channel(SuperOperator::conjugation(walk.program.m1));
    CHECK(!proj_report.trace_preserving);
    CHECK(proj_report.trace_nonincreasing);
}

TEST_CASE("compose, sum and scale act pointwise") {
    Rng rng(29);
    const Index d = 3;
    const SuperOperator e = testing::random_subchannel(d, rng);
    const SuperOperator f = testing::random_subchannel(d, rng);
    const ComplexMatrix a = testing::random_density(d, rng);

    CHECK((compose(SuperOperator::identity(d), SuperOperator::identity(d)).apply(a) - a).norm() <
          1e-13);
    CHECK((compose(f, e).apply(a) - f.apply(e.apply(a))).norm() <= 1e-10);
    CHECK((sum({e, f}).apply(a) - (e.apply(a) + f.apply(a))).norm() <= 1e-10);
    CHECK((sum({e, e}).apply(a) - 2.0 * e.apply(a)).norm() <= 1e-10);
    CHECK((scale(e, 0.5).apply(a) - 0.5 * e.apply(a)).norm() <= 1e-10);
    CHECK_THROWS_AS(scale(e, 0.0), NonPositiveScale);
    CHECK_THROWS_AS(scale(e, -1.0), NonPositiveScale);

    // Kraus growth of a plain product is bounded by the product of counts.
    const SuperOperator small = compose(SuperOperator::identity(d), e);
    CHECK(small.kraus_count() <= e.kraus_count());
}

TEST_CASE("canonicalization caps the Kraus list and preserves the action") {
    Rng rng(30);
    const Index d = 2;
    const SuperOperator e = testing::random_channel(d, 2, rng);

    // Repeated self-summing blows the raw list past 4 d^2 and triggers the
    // automatic re-extraction.
    std::vector<SuperOperator> many(20, scale(e, 1.0 / 20.0));
    const SuperOperator folded = sum(many);
    CHECK(folded.kraus_count() <= static_cast<std::size_t>(d * d));
    const ComplexMatrix a = testing::random_density(d, rng);
    CHECK((folded.apply(a) - e.apply(a)).norm() <= 1e-10);

    const SuperOperator canonical = canonicalize(e);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix b = testing::random_ginibre(d, d, rng);
        CHECK((canonical.apply(b) - e.apply(b)).norm() <= 1e-10);
    }
}

TEST_CASE("supports transform monotonically under maps") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Index d = 2 + trial % 3;
        const SuperOperator e = testing::random_subchannel(d, rng);
        const SuperOperator f = testing::random_subchannel(d, rng);
        const ComplexMatrix rho = testing::random_density(d, rng, 1 + trial % d);
        const ComplexMatrix tau = testing::random_density(d, rng);
        const ComplexMatrix sigma = rho + tau;  // supp(rho) is contained in supp(sigma)

        CHECK(subspace_leq(support(e.apply(rho)), support(e.apply(sigma))));
        CHECK(subspace_leq(support(e.apply(rho)), support(sum({e, f}).apply(rho))));

        // Equal supports map to equal supports: a rescaled mixture of rho
        // with itself has the same support but different eigenvalues.
        const ComplexMatrix reshaped = 0.3 * rho + 0.7 * (rho * rho) / rho.norm();
        CHECK(subspace_eq(support(rho), support(reshaped)));
        CHECK(subspace_eq(support(e.apply(rho)), support(e.apply(reshaped))));

        const Subspace x = support(testing::random_density(d, rng, 1 + trial % 2));
        CHECK(subspace_leq(image(e, x), image(sum({e, f}), x)));
    }
}

TEST_CASE("kraus bookkeeping: growth bound and shape errors") {
    Rng rng(32);
    const SuperOperator e = testing::random_channel(3, 2, rng);  // 2 Kraus operators
    const SuperOperator f = testing::random_channel(3, 3, rng);  // 3 Kraus operators
    CHECK(compose(f, e).kraus_count() <= e.kraus_count() * f.kraus_count());
    CHECK(sum({e, f}).kraus_count() == e.kraus_count() + f.kraus_count());

    CHECK_THROWS_AS(vec(testing::random_ginibre(2, 3, rng)), DimensionMismatch);
    ComplexVector bad_length(5);
    bad_length.setZero();
    CHECK_THROWS_AS(unvec(bad_length), DimensionMismatch);
    CHECK_THROWS_AS(compose(e, SuperOperator::identity(2)), DimensionMismatch);
    CHECK_THROWS_AS(sum({e, SuperOperator::identity(2)}), DimensionMismatch);
    CHECK_THROWS_AS(SuperOperator(2, {}), DimensionMismatch);
    CHECK_THROWS_AS(SuperOperator(2, {ComplexMatrix::Identity(3, 3)}), DimensionMismatch);
}
