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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/approx.h"
#include "qwalk/constructions.h"
#include "qwalk/scatter.h"

namespace qwalk {
namespace {

using std::numbers::sqrt2;

const cplx I{0.0, 1.0};

double svd_norm(const Eigen::Matrix2cd &a) {
    return Eigen::JacobiSVD<Eigen::Matrix2cd>(a).singularValues()(0);
}

double unitarity(const Eigen::Matrix2cd &v) {
    return (v.adjoint() * v - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

TEST(PhaseConstant, Values) {
    PhaseConstant c = phase_constant();
    EXPECT_NEAR(std::abs(c.exp_iphi), 1.0, 1e-15);
    EXPECT_NEAR(c.phi, std::atan(1.0 / (2.0 * sqrt2)), 1e-15);
    EXPECT_LT(std::abs(c.exp_iphi - std::exp(I * c.phi)), 1e-15);
    EXPECT_LT(std::abs(c.exp_iphi - phase_factor()), 1e-15);
}

TEST(PhaseConstant, OrbitNeverCloses) {
    // e^{2 i j phi} for j up to 10^6, accumulated as an angle mod 2 pi.
    const double step = 2.0 * phase_constant().phi;
    double closest = 10.0;
    for (long j = 1; j <= 1000000; j++) {
        double a = std::remainder(step * static_cast<double>(j), 2.0 * std::numbers::pi);
        closest = std::min(closest, std::abs(a));
    }
    EXPECT_GT(closest, 1e-12);
}

TEST(BasisChange, ClosedForm) {
    Eigen::Matrix2cd u = basis_change_unitary();
    Eigen::Matrix2cd want;
    want << I, 1, 1, I;
    want *= -1.0 / sqrt2;
    EXPECT_LT((u - want).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(unitarity(u), 1e-15);
}

TEST(PhaseUnitary, ThreeQuarterFlipsTopLeft) {
    for (int m = 1; m <= 99; m += 2) {
        Eigen::Matrix2cd q = phase_unitary(m, false), t = phase_unitary(m, true);
        EXPECT_LT(std::abs(q(0, 0) + t(0, 0)), 1e-12) << m;
        EXPECT_LT(std::abs(q(1, 1) - 1.0), 1e-15) << m;
        EXPECT_LT(std::abs(t(1, 1) - 1.0), 1e-15) << m;
        EXPECT_EQ(q(0, 1), cplx(0));
        EXPECT_EQ(t(1, 0), cplx(0));
    }
}

TEST(SpectralNorm, MatchesSvd) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> n;
    for (int i = 0; i < 200; i++) {
        Eigen::Matrix2cd a;
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                a(r, c) = cplx(n(rng), n(rng));
            }
        }
        EXPECT_NEAR(spectral_norm(a), svd_norm(a), 1e-12);
    }
    EXPECT_EQ(spectral_norm(Eigen::Matrix2cd::Zero()), 0.0);
}

TEST(VMatrices, UnitaryAndErrorsConsistent) {
    const Eigen::Matrix2cd diag = Eigen::Vector2cd(-1.0, 1.0).asDiagonal();
    Eigen::Matrix2cd anti;
    anti << 0, I, I, 0;
    for (int m = 1; m <= 999; m += 2) {
        SwitchApproximant a = v_matrices(m);
        EXPECT_LT(unitarity(a.v_quarter), 1e-12) << m;
        EXPECT_LT(unitarity(a.v_three_quarter), 1e-12) << m;
        double direct = std::max(svd_norm(a.v_quarter - diag), svd_norm(a.v_three_quarter - anti));
        EXPECT_NEAR(a.error, direct, 1e-12) << m;
        EXPECT_GE(a.error, 0.0);
        EXPECT_GE(a.error_frobenius, a.error - 1e-15);
    }
}

TEST(VMatrices, ErrorEqualsPhaseDistance) {
    // Both differences have rank one here, so the error is the distance of
    // i^{m-1} e^{i m phi} from the nearest of the two targets' phases.
    const double phi = phase_constant().phi;
    for (int m = 1; m <= 201; m += 2) {
        cplx z = std::pow(I, m - 1) * std::exp(I * (m * phi));
        double want = std::abs(z - 1.0);
        EXPECT_NEAR(v_matrices(m).error, want, 1e-9) << m;
    }
}

TEST(VMatrices, KnownValues) {
    const double phi = phase_constant().phi;
    EXPECT_NEAR(v_matrices(1).error, 2.0 * std::sin(phi / 2.0), 1e-12);
    EXPECT_NEAR(v_matrices(1).error, 0.338204, 1e-6);
    EXPECT_NEAR(v_matrices(37).error, 0.0076, 0.0005);
    EXPECT_NEAR(v_matrices(379).error, 0.0071, 0.0005);
    EXPECT_THROW(v_matrices(2), std::invalid_argument);
    EXPECT_THROW(v_matrices(-1), std::invalid_argument);
}

TEST(Search, SmallestRange) {
    auto r = search_best_m(1);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].m, 1);
    EXPECT_NEAR(r[0].error, v_matrices(1).error, 1e-15);
    EXPECT_THROW(search_best_m(0), std::invalid_argument);
}

TEST(Search, RecordsUpToFourHundred) {
    auto r = search_best_m(400);
    ASSERT_GE(r.size(), 2u);
    EXPECT_EQ(r[r.size() - 2].m, 37);
    EXPECT_EQ(r.back().m, 379);
    for (size_t i = 1; i < r.size(); i++) {
        EXPECT_LT(r[i].error, r[i - 1].error);
        EXPECT_FALSE(r[i].m > 37 && r[i].m < 379) << r[i].m;
    }
    auto scan = scan_odd_m(400);
    EXPECT_EQ(scan.size(), 200u);
    for (const auto &row : scan) {
        EXPECT_NEAR(row.error, v_matrices(row.m).error, 1e-12) << row.m;
    }
}

// Frozen from a run of the search itself.
TEST(Search, RecordsUpToOneHundredThousand) {
    auto r = search_best_m(100000);
    ASSERT_FALSE(r.empty());
    EXPECT_LT(r.back().error, 0.0071);
    EXPECT_EQ(r.back().m, 58323);
    EXPECT_NEAR(r.back().error, 1.85947e-05, 1e-9);
}

TEST(GraphValidation, SmallM) {
    for (int m : {1, 3, 5}) {
        GraphValidation v = validate_against_graph(m);
        EXPECT_TRUE(v.passed) << m;
        EXPECT_LT(v.deviation, 1e-8) << m;
    }
    EXPECT_THROW(validate_against_graph(1, 0.0), std::invalid_argument);
}

TEST(GraphValidation, ThirtySeven) {
    GraphValidation v = validate_against_graph(37);
    EXPECT_LT(v.deviation, 1e-8);
}

TEST(GraphValidation, DowngradedSwitch) {
    for (int m : {1, 3, 37}) {
        const double err = v_matrices(m).error;
        Gadget g = downgrade_terminal(approx_switch(m), 1);
        ASSERT_EQ(g.terminal_count(), 3);
        double s12 = std::abs(s_matrix(g, Momentum::rational(1, 4)).entries(1, 0));
        double s13 = std::abs(s_matrix(g, Momentum::rational(3, 4)).entries(2, 0));
        EXPECT_GE(s12, 1.0 - 2.0 * err) << m;
        EXPECT_GE(s13, 1.0 - 2.0 * err) << m;
    }
}

}  // namespace
}  // namespace qwalk
