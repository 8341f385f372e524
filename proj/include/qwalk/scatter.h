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

#ifndef QWALK_SCATTER_H
#define QWALK_SCATTER_H

#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/graph.h"
#include "qwalk/momentum.h"

namespace qwalk {

using cplx = std::complex<double>;

/// Threshold for calling a reflection or transmission amplitude "perfect".
inline constexpr double kPerfectTolerance = 1e-9;

/// Momenta with |sin k| below this are rejected (zero group velocity).
inline constexpr double kBandEdgeCutoff = 1e-6;

/// The linear system for a scattering state was inconsistent. Never expected
/// for a valid gadget; signals a solver defect.
struct ScatterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One incoming scattering eigenstate |sc_j(k)>.
///
/// On path j' the state is delta_{j'j} e^{-ikx} + S_{j'j}(k) e^{ikx}, x >= 1,
/// with (1, j') the terminal itself.
struct ScatteringSolution {
    Momentum momentum;
    int incoming = 0;
    /// s_row[j'] = S_{j', incoming}(k).
    Eigen::VectorXcd s_row;
    /// Amplitude on every vertex of the gadget, terminals included.
    Eigen::VectorXcd amplitudes;
    double energy = 0.0;
    /// Max-norm residual of the eigenvalue equation over the gadget vertices.
    double residual = 0.0;
    /// Dimension of the kernel of the scattering system (confined bound states).
    int confined_dimension = 0;
};

/// The square system whose unknowns are the N S-matrix entries of one column
/// followed by the internal-vertex amplitudes, one equation per gadget vertex.
class ScatteringSystem {
   public:
    ScatteringSystem(const Gadget &gadget, const Momentum &k);

    /// Minimum-norm solution for a wave incoming on path `incoming`.
    ScatteringSolution solve(int incoming) const;

    /// Kernel basis of the system matrix (columns), in unknown layout.
    Eigen::MatrixXcd kernel() const;

    const Eigen::MatrixXcd &matrix() const {
        return matrix_;
    }
    Eigen::VectorXcd rhs(int incoming) const;
    /// Converts a vector of unknowns into per-vertex amplitudes.
    Eigen::VectorXcd amplitudes_from_unknowns(const Eigen::VectorXcd &unknowns, int incoming) const;
    int rank() const {
        return static_cast<int>(solver_.rank());
    }

   private:
    Gadget gadget_;
    Momentum k_;
    std::vector<int> unknown_of_vertex_;
    Eigen::MatrixXcd matrix_;
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> solver_;
};

ScatteringSolution scattering_solve(const Gadget &gadget, const Momentum &k, int incoming);

struct SMatrix {
    Momentum momentum;
    /// entries(j', j) = S_{j', j}(k).
    Eigen::MatrixXcd entries;

    double unitarity_error() const;
    double symmetry_error() const;
};

SMatrix s_matrix(const Gadget &gadget, const Momentum &k);

/// Momenta at which a two-terminal gadget perfectly reflects or transmits.
struct RTClassification {
    std::vector<Momentum> reflect_set;
    std::vector<Momentum> transmit_set;
    double tolerance = kPerfectTolerance;
    std::vector<Momentum> grid;
};

RTClassification classify_rt(const Gadget &gadget, std::span<const Momentum> grid, double tol = kPerfectTolerance);

struct SwitchVerdict {
    bool is_switch = false;
    /// |S_{12}(k)| for each k in D.
    std::vector<double> transmit_12;
    /// |S_{13}(p)| for each p in D'.
    std::vector<double> transmit_13;
};

/// Three-terminal check: |S_12(k)| = 1 on D and |S_13(p)| = 1 on D'.
SwitchVerdict is_momentum_switch(
    const Gadget &gadget,
    std::span<const Momentum> d,
    std::span<const Momentum> d_prime,
    double tol = kPerfectTolerance);

/// Same graph with terminal index t turned into an internal vertex.
Gadget downgrade_terminal(const Gadget &gadget, int t);

/// Transmission coefficient e^{2ik} t1 t2 of two perfectly transmitting
/// gadgets merged output-to-input.
cplx series_transmission(cplx t1, cplx t2, const Momentum &k);

/// Max-norm residual of H psi = 2cos(k) psi on the gadget vertices for a state
/// whose amplitude on path j is incoming[j] e^{-ikx} + outgoing[j] e^{ikx}.
/// Also includes the mismatch between each terminal amplitude and its path
/// value at x = 1.
double eigen_residual(
    const Gadget &gadget,
    const Momentum &k,
    const Eigen::VectorXcd &amplitudes,
    const Eigen::VectorXcd &incoming,
    const Eigen::VectorXcd &outgoing);

}  // namespace qwalk

#endif
