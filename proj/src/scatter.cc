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

#include "qwalk/scatter.h"

#include <algorithm>
#include <cmath>

namespace qwalk {

namespace {

constexpr double kRankThreshold = 1e-10;
constexpr double kInconsistentResidual = 1e-8;

void check_momentum(const Momentum &k) {
    if (std::abs(std::sin(k.value())) < kBandEdgeCutoff) {
        throw std::invalid_argument("momentum " + k.str() + " is at a band edge (zero group velocity)");
    }
}

cplx expi(double theta) {
    return std::polar(1.0, theta);
}

}  // namespace

ScatteringSystem::ScatteringSystem(const Gadget &gadget, const Momentum &k) : gadget_(gadget), k_(k) {
    check_momentum(k);
    const int n = gadget.vertex_count();
    const int nt = gadget.terminal_count();
    unknown_of_vertex_.assign(n, -1);
    int next = nt;
    for (int v = 0; v < n; v++) {
        int j = gadget.terminal_index(v);
        unknown_of_vertex_[v] = j >= 0 ? j : next++;
    }

    // Terminal amplitude: delta e^{-ik} + S e^{ik}; next site on its path:
    // delta e^{-2ik} + S e^{2ik}. Only the S coefficients enter the matrix.
    const cplx e1 = expi(k.value());
    const cplx e2 = expi(2 * k.value());
    const double energy = k.energy();
    matrix_ = Eigen::MatrixXcd::Zero(n, n);
    auto coeff = [&](int v) { return gadget.terminal_index(v) >= 0 ? e1 : cplx(1.0); };
    for (int v = 0; v < n; v++) {
        for (int u : gadget.graph().neighbors(v)) {
            matrix_(v, unknown_of_vertex_[u]) += coeff(u);
        }
        matrix_(v, unknown_of_vertex_[v]) -= energy * coeff(v);
        if (gadget.terminal_index(v) >= 0) {
            matrix_(v, unknown_of_vertex_[v]) += e2;
        }
    }
    solver_.setThreshold(kRankThreshold);
    solver_.compute(matrix_);
}

Eigen::VectorXcd ScatteringSystem::rhs(int incoming) const {
    const int n = gadget_.vertex_count();
    const cplx em1 = expi(-k_.value());
    const cplx em2 = expi(-2 * k_.value());
    const double energy = k_.energy();
    const int t = gadget_.terminals()[incoming];
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(n);
    // Move the known incoming-wave terms to the right-hand side.
    for (int u : gadget_.graph().neighbors(t)) {
        b(u) -= em1;
    }
    b(t) += energy * em1;
    b(t) -= em2;
    return b;
}

Eigen::VectorXcd ScatteringSystem::amplitudes_from_unknowns(const Eigen::VectorXcd &unknowns, int incoming) const {
    const int n = gadget_.vertex_count();
    const cplx e1 = expi(k_.value());
    const cplx em1 = expi(-k_.value());
    Eigen::VectorXcd amps(n);
    for (int v = 0; v < n; v++) {
        int j = gadget_.terminal_index(v);
        if (j >= 0) {
            amps(v) = unknowns(j) * e1 + (j == incoming ? em1 : cplx(0.0));
        } else {
            amps(v) = unknowns(unknown_of_vertex_[v]);
        }
    }
    return amps;
}

ScatteringSolution ScatteringSystem::solve(int incoming) const {
    const int nt = gadget_.terminal_count();
    if (incoming < 0 || incoming >= nt) {
        throw std::invalid_argument("incoming path index " + std::to_string(incoming) + " out of range");
    }
    Eigen::VectorXcd b = rhs(incoming);
    Eigen::VectorXcd x = solver_.solve(b);

    ScatteringSolution out{k_, incoming, x.head(nt), amplitudes_from_unknowns(x, incoming), k_.energy(), 0.0, 0};
    out.confined_dimension = gadget_.vertex_count() - rank();

    Eigen::VectorXcd in = Eigen::VectorXcd::Zero(nt);
    in(incoming) = 1.0;
    out.residual = eigen_residual(gadget_, k_, out.amplitudes, in, out.s_row);
    if (!(out.residual < kInconsistentResidual)) {
        throw ScatterError(
            "scattering system at k=" + k_.str() + " is inconsistent (residual " + std::to_string(out.residual) +
            ")");
    }
    return out;
}

Eigen::MatrixXcd ScatteringSystem::kernel() const {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix_, Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    double cutoff = kRankThreshold * std::max(1.0, sv.size() ? sv(0) : 0.0);
    int null_dim = 0;
    for (int i = 0; i < sv.size(); i++) {
        null_dim += sv(i) < cutoff;
    }
    return svd.matrixV().rightCols(null_dim);
}

ScatteringSolution scattering_solve(const Gadget &gadget, const Momentum &k, int incoming) {
    return ScatteringSystem(gadget, k).solve(incoming);
}

double SMatrix::unitarity_error() const {
    auto id = Eigen::MatrixXcd::Identity(entries.rows(), entries.cols());
    return (entries.adjoint() * entries - id).cwiseAbs().maxCoeff();
}

double SMatrix::symmetry_error() const {
    return (entries - entries.transpose()).cwiseAbs().maxCoeff();
}

SMatrix s_matrix(const Gadget &gadget, const Momentum &k) {
    ScatteringSystem system(gadget, k);
    const int nt = gadget.terminal_count();
    SMatrix out{k, Eigen::MatrixXcd(nt, nt)};
    for (int j = 0; j < nt; j++) {
        out.entries.col(j) = system.solve(j).s_row;
    }
    return out;
}

RTClassification classify_rt(const Gadget &gadget, std::span<const Momentum> grid, double tol) {
    if (gadget.terminal_count() != 2) {
        throw std::invalid_argument(
            "R/T classification needs exactly 2 terminals, got " + std::to_string(gadget.terminal_count()));
    }
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    RTClassification out;
    out.tolerance = tol;
    out.grid.assign(grid.begin(), grid.end());
    for (const Momentum &k : grid) {
        auto sol = scattering_solve(gadget, k, 0);
        if (std::abs(std::abs(sol.s_row(0)) - 1.0) < tol) {
            out.reflect_set.push_back(k);
        }
        if (std::abs(std::abs(sol.s_row(1)) - 1.0) < tol) {
            out.transmit_set.push_back(k);
        }
    }
    return out;
}

SwitchVerdict is_momentum_switch(
    const Gadget &gadget, std::span<const Momentum> d, std::span<const Momentum> d_prime, double tol) {
    if (gadget.terminal_count() != 3) {
        throw std::invalid_argument(
            "momentum switch needs exactly 3 terminals, got " + std::to_string(gadget.terminal_count()));
    }
    for (const Momentum &k : d) {
        if (std::find(d_prime.begin(), d_prime.end(), k) != d_prime.end()) {
            throw std::invalid_argument("momentum " + k.str() + " appears in both switch sets");
        }
    }
    SwitchVerdict out;
    out.is_switch = true;
    for (const Momentum &k : d) {
        double mag = std::abs(scattering_solve(gadget, k, 0).s_row(1));
        out.transmit_12.push_back(mag);
        out.is_switch = out.is_switch && std::abs(mag - 1.0) < tol;
    }
    for (const Momentum &p : d_prime) {
        double mag = std::abs(scattering_solve(gadget, p, 0).s_row(2));
        out.transmit_13.push_back(mag);
        out.is_switch = out.is_switch && std::abs(mag - 1.0) < tol;
    }
    return out;
}

Gadget downgrade_terminal(const Gadget &gadget, int t) {
    if (gadget.terminal_count() < 2) {
        throw std::invalid_argument("cannot downgrade the only terminal of a gadget");
    }
    if (t < 0 || t >= gadget.terminal_count()) {
        throw std::invalid_argument("terminal index " + std::to_string(t) + " out of range");
    }
    std::vector<int> terminals = gadget.terminals();
    terminals.erase(terminals.begin() + t);
    return Gadget(gadget.graph(), std::move(terminals), gadget.name());
}

cplx series_transmission(cplx t1, cplx t2, const Momentum &k) {
    if (std::abs(std::abs(t1) - 1.0) > kPerfectTolerance || std::abs(std::abs(t2) - 1.0) > kPerfectTolerance) {
        throw std::invalid_argument("series composition needs perfectly transmitting parts (|T| = 1)");
    }
    return expi(2 * k.value()) * t1 * t2;
}

double eigen_residual(
    const Gadget &gadget,
    const Momentum &k,
    const Eigen::VectorXcd &amplitudes,
    const Eigen::VectorXcd &incoming,
    const Eigen::VectorXcd &outgoing) {
    const double energy = k.energy();
    auto path_value = [&](int j, int x) {
        return incoming(j) * expi(-k.value() * x) + outgoing(j) * expi(k.value() * x);
    };
    double worst = 0.0;
    for (int v = 0; v < gadget.vertex_count(); v++) {
        cplx lhs = -energy * amplitudes(v);
        for (int u : gadget.graph().neighbors(v)) {
            lhs += amplitudes(u);
        }
        int j = gadget.terminal_index(v);
        if (j >= 0) {
            lhs += path_value(j, 2);
            worst = std::max(worst, std::abs(amplitudes(v) - path_value(j, 1)));
        }
        worst = std::max(worst, std::abs(lhs));
    }
    return worst;
}

}  // namespace qwalk
