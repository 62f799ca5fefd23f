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

#include <Eigen/Dense>
#include <complex>

#include "qpv/config.hpp"

namespace qpv {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline ComplexMatrix dagger(const ComplexMatrix& a) { return a.adjoint(); }

inline double frobenius_norm(const ComplexMatrix& a) { return a.norm(); }

/// ||A - A^dag||_F <= herm * max(1, ||A||_F).
bool is_hermitian(const ComplexMatrix& a, const Tolerances& tol = Tolerances{});

/// Hermitian and all eigenvalues >= -psd * max(1, lambda_max).
bool is_positive_semidefinite(const ComplexMatrix& a, const Tolerances& tol = Tolerances{});

/// A <= B in the Loewner order, within tolerance: B - A is PSD.
bool loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b, const Tolerances& tol = Tolerances{});

/// Kronecker product with row-major index convention:
/// (A (x) B)[(i*p + k), (j*q + l)] = A(i,j) * B(k,l) for B of size p x q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// M^n by binary exponentiation. M must be square; n >= 0.
ComplexMatrix matrix_power(const ComplexMatrix& m, unsigned n);

/// Largest eigenvalue modulus of a general (not necessarily Hermitian)
/// square matrix.
double spectral_radius(const ComplexMatrix& m);

}  // namespace qpv
