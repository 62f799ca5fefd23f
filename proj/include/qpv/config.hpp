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

namespace qpv {

/// Central numerical-tolerance record. Every analysis routine takes one of
/// these (defaulted); there are no hidden tuning knobs elsewhere.
///
/// Defaults are sized for double precision at desk scale (dim <= 16) with
/// at most a few times dim repeated matrix products between rank decisions.
struct Tolerances {
    /// Relative eigenvalue / residual cutoff for rank decisions. An
    /// eigenvector of a positive operator counts toward the support iff its
    /// eigenvalue exceeds rank_rel * (largest eigenvalue).
    double rank_rel = 1e-9;
    /// Orthonormality of stored subspace bases (Gram-matrix residual).
    double orth = 1e-8;
    /// Hermiticity check: ||A - A^dag||_F against max(1, ||A||_F).
    double herm = 1e-8;
    /// Positive semidefiniteness: eigenvalues >= -psd * max(1, lambda_max).
    double psd = 1e-8;
    /// Subspace comparison: Frobenius distance between projectors.
    double subspace = 1e-7;
    /// Zero test for partial states, relative to the initial state's norm.
    double zero = 1e-9;
    /// Measurement completeness residual ||M0^dag M0 + M1^dag M1 - I||_F.
    double measurement = 1e-8;
    /// Relative eigenvalue cutoff when re-extracting Kraus operators from a
    /// Choi matrix. Tighter than rank_rel: canonicalization must preserve
    /// the action of the map, not just its support.
    double choi_rel = 1e-14;

    /// All tolerances multiplied by a common factor (used by the CLI's
    /// --tolerance flag).
    Tolerances scaled(double factor) const {
        Tolerances t = *this;
        t.rank_rel *= factor;
        t.orth *= factor;
        t.herm *= factor;
        t.psd *= factor;
        t.subspace *= factor;
        t.zero *= factor;
        t.measurement *= factor;
        t.choi_rel *= factor;
        return t;
    }
};

}  // namespace qpv
