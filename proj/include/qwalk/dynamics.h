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

#ifndef QWALK_DYNAMICS_H
#define QWALK_DYNAMICS_H

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/graph.h"
#include "qwalk/momentum.h"
#include "qwalk/scatter.h"

namespace qwalk {

inline constexpr int kDefaultVertexCap = 5000;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kLeakThreshold = 1e-6;

/// e^{-iHt} for the adjacency matrix of a fixed graph, via one dense
/// eigendecomposition reused for every time.
class Propagator {
   public:
    /// Throws std::invalid_argument if the graph exceeds `vertex_cap`.
    explicit Propagator(const Graph &graph, int vertex_cap = kDefaultVertexCap);

    /// Throws std::invalid_argument unless the state has unit norm (1e-10) and t >= 0.
    Eigen::VectorXcd evolve(const Eigen::VectorXcd &state, double t) const;

    /// <psi|H|psi>.
    double energy(const Eigen::VectorXcd &state) const;

    int dimension() const {
        return static_cast<int>(eigenvalues_.size());
    }

   private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

Eigen::VectorXcd evolve(const Graph &graph, const Eigen::VectorXcd &state, double t, int vertex_cap = kDefaultVertexCap);

struct WavePacket {
    /// Terminal index of the arm the packet starts on.
    int arm = 0;
    /// Centre x0 in path coordinates (x = 1 is the terminal).
    double center = 0.0;
    double width = 10.0;
    Momentum momentum = Momentum::rational(1, 2);

    /// Throws std::invalid_argument unless x0 - 4 sigma > 0 and x0 + 4 sigma < L.
    void validate(int length) const;
    /// |dE/dk| = |2 sin k|.
    double group_speed() const;
};

/// Normalised e^{-ikx} exp(-(x - x0)^2 / (2 sigma^2)) on the packet's arm.
Eigen::VectorXcd packet_state(const TruncatedGraph &graph, const WavePacket &packet);

struct RunSample {
    double t = 0.0;
    /// Probability on the outer half (x > L/2) of each arm.
    std::vector<double> arm_probability;
    /// Everything else: the gadget and the inner half of the arms.
    double inner_probability = 0.0;
    double norm = 1.0;
    double energy = 0.0;
    /// Probability on the last three sites of all arms.
    double edge_probability = 0.0;
};

struct ScatterRunReport {
    WavePacket packet;
    int length = 0;
    double time = 0.0;
    /// At time T.
    std::vector<double> arm_probability;
    std::vector<double> predicted;
    double inner_probability = 0.0;
    double norm_drift = 0.0;
    double energy_drift = 0.0;
    /// Largest edge probability seen at any sample.
    double max_edge_probability = 0.0;
    bool leaked = false;
    bool valid() const {
        return !leaked;
    }
    std::vector<RunSample> samples;
};

/// (2 x0 + diam) / |2 sin k| scaled by 1.2.
double default_run_time(const Gadget &gadget, const WavePacket &packet);

/// Starts the packet on its arm of the gadget with arms of `length` extra
/// sites, evolves to time T (default_run_time when empty) and compares the
/// outgoing probabilities with |S_{j', j}(k)|^2. `samples` equally spaced
/// snapshots (including t = 0 and t = T) feed the leak check and time series.
ScatterRunReport scatter_experiment(
    const Gadget &gadget,
    const WavePacket &packet,
    int length,
    std::optional<double> time = std::nullopt,
    int samples = 50,
    int vertex_cap = kDefaultVertexCap);

/// Max residual of H psi = 2cos(k) psi at the vertices of the truncated graph
/// away from the cut, for the scattering state incoming on path `incoming`.
double stationary_residual(const Gadget &gadget, const Momentum &k, int incoming, int length);

}  // namespace qwalk

#endif
