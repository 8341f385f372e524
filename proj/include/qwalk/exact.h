// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QWALK_EXACT_H
#define QWALK_EXACT_H

#include <optional>
#include <stdexcept>
#include <vector>

#include "qwalk/graph.h"
#include "qwalk/momentum.h"
#include "qwalk/q2.h"

namespace qwalk {

/// The only momenta at which cos k and sin k lie in Q(sqrt 2) with 2cos k = +-sqrt 2.
bool is_quarter_momentum(const Momentum &k);

/// An exact check that should be impossible to fail did fail.
struct FalsificationAlarm : std::logic_error {
    using std::logic_error::logic_error;
};

/// Block adjacency of the gadget split into terminals (in terminal order) and
/// internal vertices (ascending), and the matrix whose nullspace parametrises
/// the 2cos(k)-eigenspace of the infinite graph.
///
/// Unknown layout: kappa (N), sigma (N), iota (internal). On path j the
/// amplitude is kappa_j cos(k(x-1)) + sigma_j sin(k(x-1)).
struct BoundaryMatrix {
    Momentum momentum;
    std::vector<int> terminals;
    std::vector<int> internal;
    std::vector<std::vector<int>> a;
    std::vector<std::vector<int>> b;
    std::vector<std::vector<int>> d;
    Q2Matrix assembled;

    int path_count() const {
        return static_cast<int>(terminals.size());
    }
    int unknown_count() const {
        return 2 * path_count() + static_cast<int>(internal.size());
    }
};

BoundaryMatrix boundary_matrix(const Gadget &gadget, const Momentum &k);

/// One scattering-subspace basis vector tau = u + sqrt2 w, evaluated on the
/// gadget plus a finite stretch of every path.
struct ExactBasisVector {
    /// (kappa, sigma, iota).
    Q2Vector parameters;
    /// Amplitudes on the truncation vertices.
    Q2Vector tau;
    RatVector u;
    RatVector w;
};

struct ExactScatteringBasis {
    Momentum momentum;
    /// +1 at -pi/4 (energy sqrt2), -1 at -3pi/4 (energy -sqrt2).
    int sign = 1;
    BoundaryMatrix boundary;
    /// Full nullspace of M, in reduced echelon form.
    Q2Matrix nullspace;
    /// States with kappa = sigma = 0.
    Q2Matrix confined;
    /// N vectors orthogonal to the confined ones.
    std::vector<ExactBasisVector> scattering;
    /// Gadget plus `path_sites` sites per path, (1, j) being the terminal.
    TruncatedGraph truncation;
    int path_sites = 0;
    /// Rows where finite truncation does not disturb a few applications of H.
    std::vector<bool> checkable;
};

/// Throws std::invalid_argument for k other than -pi/4, -3pi/4. Throws
/// FalsificationAlarm if a symbolic identity fails.
ExactScatteringBasis exact_scattering_basis(const Gadget &gadget, const Momentum &k);

using Q2ComplexMatrix = FieldMatrix<Q2Complex>;

/// S = B_out A_in^{-1} from the path coefficients of the scattering basis.
Q2ComplexMatrix exact_s_matrix(const ExactScatteringBasis &basis);

/// Exact path amplitude kappa cos(k(x-1)) + sigma sin(k(x-1)).
Q2Scalar path_amplitude(const Q2Scalar &kappa, const Q2Scalar &sigma, const Momentum &k, int x);

/// H v on the truncation, exact.
template <class F>
FieldVector<F> apply_adjacency(const Graph &g, const FieldVector<F> &v) {
    FieldVector<F> out(v.size(), F(0));
    for (int x = 0; x < g.vertex_count(); x++) {
        for (int y : g.neighbors(x)) {
            out[x] += v[y];
        }
    }
    return out;
}

struct ConjugationWitness {
    RatVector a;
    RatVector b;
    Q2Complex alpha;
    Q2Complex beta;
    /// beta / alpha = r + s sqrt2.
    mpq_class r;
    mpq_class s;
    RatVector c;
    /// (H - sqrt2) c: an energy -sqrt2 eigenstate silent on path 2.
    Q2Vector conjugated_state;
    /// Some x with nonzero amplitude at (x, 1).
    int path1_site = 0;
};

struct ConjugationReport {
    enum class Verdict { confirmed, not_applicable };
    Verdict verdict = Verdict::not_applicable;
    Q2ComplexMatrix s_quarter;
    Q2ComplexMatrix s_three_quarter;
    std::optional<ConjugationWitness> witness;
    /// The truncation the witness vectors are indexed by.
    std::optional<ExactScatteringBasis> basis;
};

/// If the two-terminal gadget reflects perfectly at -pi/4 (exactly), builds the
/// rational vector c and checks that (H - sqrt2) c certifies perfect reflection
/// at -3pi/4. Throws FalsificationAlarm if any step fails for a reflecting gadget.
ConjugationReport conjugation_check(const Gadget &gadget);

}  // namespace qwalk

#endif
