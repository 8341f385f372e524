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

#include "qwalk/dynamics.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace qwalk {

Propagator::Propagator(const Graph &graph, int vertex_cap) {
    if (graph.vertex_count() > vertex_cap) {
        throw std::invalid_argument(
            "graph has " + std::to_string(graph.vertex_count()) + " vertices, above the dense cap of " +
            std::to_string(vertex_cap));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(graph.adjacency());
    eigenvalues_ = eig.eigenvalues();
    eigenvectors_ = eig.eigenvectors();
}

Eigen::VectorXcd Propagator::evolve(const Eigen::VectorXcd &state, double t) const {
    if (state.size() != dimension()) {
        throw std::invalid_argument("state dimension does not match the graph");
    }
    if (std::abs(state.norm() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state must be normalized");
    }
    if (!(t >= 0)) {
        throw std::invalid_argument("evolution time must be non-negative");
    }
    Eigen::VectorXcd c = eigenvectors_.transpose() * state;
    for (int i = 0; i < c.size(); i++) {
        c(i) *= std::polar(1.0, -eigenvalues_(i) * t);
    }
    return eigenvectors_ * c;
}

double Propagator::energy(const Eigen::VectorXcd &state) const {
    Eigen::VectorXcd c = eigenvectors_.transpose() * state;
    return (c.cwiseAbs2().array() * eigenvalues_.array()).sum();
}

Eigen::VectorXcd evolve(const Graph &graph, const Eigen::VectorXcd &state, double t, int vertex_cap) {
    return Propagator(graph, vertex_cap).evolve(state, t);
}

void WavePacket::validate(int length) const {
    if (!(width > 0)) {
        throw std::invalid_argument("packet width must be positive");
    }
    if (!(center - 4 * width > 0 && center + 4 * width < length)) {
        throw std::invalid_argument(
            "packet centre " + std::to_string(center) + " with width " + std::to_string(width) +
            " does not fit on an arm of length " + std::to_string(length));
    }
}

double WavePacket::group_speed() const {
    return std::abs(2.0 * std::sin(momentum.value()));
}

Eigen::VectorXcd packet_state(const TruncatedGraph &graph, const WavePacket &packet) {
    packet.validate(graph.length);
    if (packet.arm < 0 || packet.arm >= static_cast<int>(graph.arms.size())) {
        throw std::invalid_argument("packet arm " + std::to_string(packet.arm) + " out of range");
    }
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(graph.graph.vertex_count());
    const double k = packet.momentum.value();
    for (int x = 1; x <= graph.length + 1; x++) {
        double d = (x - packet.center) / packet.width;
        psi(graph.site(x, packet.arm)) = std::polar(std::exp(-0.5 * d * d), -k * x);
    }
    return psi / psi.norm();
}

double default_run_time(const Gadget &gadget, const WavePacket &packet) {
    const int diam = gadget.graph().diameter();
    if (diam < 0) {
        throw std::invalid_argument("gadget graph is disconnected");
    }
    return 1.2 * (2.0 * packet.center + diam) / packet.group_speed();
}

ScatterRunReport scatter_experiment(
    const Gadget &gadget,
    const WavePacket &packet,
    int length,
    std::optional<double> time,
    int samples,
    int vertex_cap) {
    if (samples < 2) {
        throw std::invalid_argument("need at least 2 samples");
    }
    const TruncatedGraph tg = attach_truncated_paths(gadget, length);
    const Eigen::VectorXcd psi0 = packet_state(tg, packet);
    const Propagator prop(tg.graph, vertex_cap);
    const int arms = gadget.terminal_count();

    ScatterRunReport out;
    out.packet = packet;
    out.length = length;
    out.time = time ? *time : default_run_time(gadget, packet);
    if (!(out.time >= 0)) {
        throw std::invalid_argument("evolution time must be non-negative");
    }
    const Eigen::VectorXcd s_col = scattering_solve(gadget, packet.momentum, packet.arm).s_row;
    for (int j = 0; j < arms; j++) {
        out.predicted.push_back(std::norm(s_col(j)));
    }

    const double e0 = prop.energy(psi0);
    for (int i = 0; i < samples; i++) {
        const double t = out.time * i / (samples - 1);
        const Eigen::VectorXcd psi = prop.evolve(psi0, t);
        RunSample s;
        s.t = t;
        s.norm = psi.norm();
        s.energy = prop.energy(psi);
        double outer_total = 0.0;
        for (int j = 0; j < arms; j++) {
            double p = 0.0;
            for (int x = length / 2 + 1; x <= length + 1; x++) {
                p += std::norm(psi(tg.site(x, j)));
            }
            for (int x = std::max(1, length - 1); x <= length + 1; x++) {
                s.edge_probability += std::norm(psi(tg.site(x, j)));
            }
            s.arm_probability.push_back(p);
            outer_total += p;
        }
        s.inner_probability = s.norm * s.norm - outer_total;
        out.norm_drift = std::max(out.norm_drift, std::abs(s.norm - 1.0));
        out.energy_drift = std::max(out.energy_drift, std::abs(s.energy - e0));
        out.max_edge_probability = std::max(out.max_edge_probability, s.edge_probability);
        out.samples.push_back(std::move(s));
    }
    const RunSample &last = out.samples.back();
    out.arm_probability = last.arm_probability;
    out.inner_probability = last.inner_probability;
    out.leaked = out.max_edge_probability > kLeakThreshold;
    return out;
}

double stationary_residual(const Gadget &gadget, const Momentum &k, int incoming, int length) {
    const ScatteringSolution sol = scattering_solve(gadget, k, incoming);
    const TruncatedGraph tg = attach_truncated_paths(gadget, length);
    const int n = tg.graph.vertex_count();
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(n);
    psi.head(gadget.vertex_count()) = sol.amplitudes;
    std::vector<bool> boundary(n, false);
    for (int j = 0; j < gadget.terminal_count(); j++) {
        for (int x = 2; x <= length + 1; x++) {
            cplx in = j == incoming ? std::polar(1.0, -k.value() * x) : cplx(0.0);
            psi(tg.site(x, j)) = in + sol.s_row(j) * std::polar(1.0, k.value() * x);
        }
        boundary[tg.site(length + 1, j)] = true;
    }
    double worst = 0.0;
    for (int v = 0; v < n; v++) {
        if (boundary[v]) {
            continue;
        }
        cplx r = -k.energy() * psi(v);
        for (int u : tg.graph.neighbors(v)) {
            r += psi(u);
        }
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace qwalk
