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

#include "qwalk/approx.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qwalk/constructions.h"
#include "qwalk/scatter.h"

namespace qwalk {

namespace {

constexpr int kRenormalizeEvery = 1024;

void require_odd(int m) {
    if (m < 1 || m % 2 == 0) {
        throw std::invalid_argument("m must be odd and positive, got " + std::to_string(m));
    }
}

cplx i_power(int e) {
    static const cplx table[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((e % 4) + 4) % 4];
}

}  // namespace

PhaseConstant phase_constant() {
    return {phase_factor(), std::atan(1.0 / (2.0 * std::numbers::sqrt2))};
}

Eigen::Matrix2cd basis_change_unitary() {
    const cplx i(0, 1);
    Eigen::Matrix2cd u;
    u << i, 1.0, 1.0, i;
    return -u / std::numbers::sqrt2;
}

Eigen::Matrix2cd phase_unitary(int m, bool three_quarter) {
    require_odd(m);
    cplx z = i_power(m - 1) * std::polar(1.0, m * phase_constant().phi);
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Zero();
    u(0, 0) = three_quarter ? z : -z;
    u(1, 1) = 1.0;
    return u;
}

double spectral_norm(const Eigen::Matrix2cd &a) {
    // Singular values of a 2x2: s1^2 + s2^2 = |A|_F^2, s1 s2 = |det A|.
    double f2 = a.squaredNorm();
    double det = std::abs(a.determinant());
    double disc = std::max(0.0, f2 * f2 - 4.0 * det * det);
    return std::sqrt((f2 + std::sqrt(disc)) / 2.0);
}

SwitchApproximant approximant_from_phase(int m, cplx z) {
    require_odd(m);
    const Eigen::Matrix2cd ubc = basis_change_unitary();
    const Eigen::Matrix2cd ubc_conj = ubc.conjugate();
    Eigen::Matrix2cd um = Eigen::Matrix2cd::Zero();
    um(1, 1) = 1.0;

    SwitchApproximant out;
    out.m = m;
    um(0, 0) = -z;
    out.v_quarter = -ubc * um * ubc;
    um(0, 0) = z;
    out.v_three_quarter = -ubc_conj * um * ubc_conj;

    Eigen::Matrix2cd target_quarter = Eigen::Matrix2cd::Zero();
    target_quarter(0, 0) = -1.0;
    target_quarter(1, 1) = 1.0;
    Eigen::Matrix2cd target_three = Eigen::Matrix2cd::Zero();
    target_three(0, 1) = cplx(0, 1);
    target_three(1, 0) = cplx(0, 1);
    Eigen::Matrix2cd d1 = out.v_quarter - target_quarter;
    Eigen::Matrix2cd d3 = out.v_three_quarter - target_three;
    out.error = std::max(spectral_norm(d1), spectral_norm(d3));
    out.error_frobenius = std::max(d1.norm(), d3.norm());
    return out;
}

SwitchApproximant v_matrices(int m) {
    require_odd(m);
    return approximant_from_phase(m, i_power(m - 1) * std::polar(1.0, m * phase_constant().phi));
}

std::vector<ApproxRow> scan_odd_m(int m_max) {
    if (m_max < 1) {
        throw std::invalid_argument("m_max must be at least 1");
    }
    // z_m = i^{m-1} e^{i m phi}; z_{m+2} = -e^{2 i phi} z_m.
    const cplx e = phase_constant().exp_iphi;
    const cplx step = -e * e;
    cplx z = e;
    std::vector<ApproxRow> rows;
    double best = INFINITY;
    for (int m = 1, count = 0; m <= m_max; m += 2, count++) {
        if (count % kRenormalizeEvery == 0) {
            z /= std::abs(z);
        }
        SwitchApproximant a = approximant_from_phase(m, z);
        ApproxRow row{m, a.error, a.error_frobenius, a.error < best};
        if (row.is_record) {
            best = a.error;
        }
        rows.push_back(row);
        z *= step;
    }
    return rows;
}

std::vector<ApproxRow> search_best_m(int m_max) {
    std::vector<ApproxRow> records;
    for (const ApproxRow &row : scan_odd_m(m_max)) {
        if (row.is_record) {
            records.push_back(row);
        }
    }
    return records;
}

GraphValidation validate_against_graph(int m, double tol) {
    require_odd(m);
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    const Gadget g = approx_switch(m);
    const SwitchApproximant a = v_matrices(m);
    GraphValidation out{m, 0.0, tol, false};
    for (int which = 0; which < 2; which++) {
        const Momentum k = Momentum::rational(which == 0 ? 1 : 3, 4);
        const Eigen::Matrix2cd &v = which == 0 ? a.v_quarter : a.v_three_quarter;
        Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
        expected.block<2, 2>(2, 0) = v;
        expected.block<2, 2>(0, 2) = v;
        Eigen::MatrixXcd got = s_matrix(g, k).entries;
        out.deviation = std::max(out.deviation, (got - expected).cwiseAbs().maxCoeff());
    }
    out.passed = out.deviation < tol;
    return out;
}

}  // namespace qwalk
