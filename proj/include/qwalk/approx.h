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

#ifndef QWALK_APPROX_H
#define QWALK_APPROX_H

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace qwalk {

using cplx = std::complex<double>;

struct PhaseConstant {
    /// 2 sqrt2 / 3 + i / 3.
    cplx exp_iphi;
    /// arctan(1 / (2 sqrt2)).
    double phi;
};

PhaseConstant phase_constant();

/// -(1/sqrt2) [[i, 1], [1, i]].
Eigen::Matrix2cd basis_change_unitary();

/// diag(-i^{m-1} e^{i m phi}, 1) for the quarter momentum, and the same with the
/// top-left sign flipped for the three-quarter momentum.
Eigen::Matrix2cd phase_unitary(int m, bool three_quarter);

/// Largest singular value of a 2x2 matrix.
double spectral_norm(const Eigen::Matrix2cd &a);

struct SwitchApproximant {
    int m = 0;
    /// Transmission block at -pi/4 and at -3pi/4.
    Eigen::Matrix2cd v_quarter;
    Eigen::Matrix2cd v_three_quarter;
    /// max of the distances to diag(-1, 1) and [[0, i], [i, 0]], spectral norm.
    double error = 0.0;
    double error_frobenius = 0.0;
};

/// Throws std::invalid_argument for even or non-positive m.
SwitchApproximant v_matrices(int m);

/// Same, given z = i^{m-1} e^{i m phi} directly.
SwitchApproximant approximant_from_phase(int m, cplx z);

struct ApproxRow {
    int m = 0;
    double error = 0.0;
    double error_frobenius = 0.0;
    bool is_record = false;
};

/// Every odd m <= m_max, in order, flagging those that beat all smaller odd m.
/// The phase is advanced by repeated multiplication and renormalised.
std::vector<ApproxRow> scan_odd_m(int m_max);

/// The record-breaking rows only (strictly decreasing errors).
std::vector<ApproxRow> search_best_m(int m_max);

struct GraphValidation {
    int m = 0;
    /// Max |S_graph - S_closed_form| over the full 4x4 matrices at both momenta.
    double deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// Compares the numeric S-matrix of approx_switch(m) with [[0, V], [V, 0]].
GraphValidation validate_against_graph(int m, double tol = 1e-8);

}  // namespace qwalk

#endif
