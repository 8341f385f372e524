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

#ifndef QWALK_CONSTRUCTIONS_H
#define QWALK_CONSTRUCTIONS_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/graph.h"
#include "qwalk/momentum.h"
#include "qwalk/scatter.h"

namespace qwalk {

/// Eigenvalues of the certifying subgraph within this distance of 2cos(k) are
/// treated as equal to it.
inline constexpr double kEigenvalueMatch = 1e-8;

/// A two-terminal gadget made from a finite graph G0 and a connector vertex a
/// that is joined to every vertex of the attachment set S and to both
/// terminals. |S| = 1 is the "type 2" special case.
struct Type1Spec {
    Graph g0;
    std::vector<int> attach;

    /// Throws std::invalid_argument unless S is non-empty, in range, distinct.
    void validate() const;
    bool is_type2() const {
        return attach.size() == 1;
    }
    /// V(G0) minus S, in increasing order: the vertices of the induced subgraph g0.
    std::vector<int> inner_vertices() const;
};

/// Vertex layout: G0 keeps ids 0..n0-1, the connector is n0 and the terminals
/// are n0+1, n0+2.
Gadget build_type1(const Type1Spec &spec);

/// A gadget-schema document doubles as a spec: the graph is G0 and the
/// terminal list is S.
Type1Spec spec_from_gadget(const Gadget &g0_with_attach);
Gadget spec_to_gadget(const Type1Spec &spec);

/// Evidence from the subgraph spectrum that a momentum reflects or transmits.
struct EigenCertificate {
    enum class Kind { reflect, transmit };

    Kind kind;
    Momentum momentum;
    /// Vertices (G0 ids) the eigenvector lives on: all of G0 for reflect,
    /// the inner vertices for transmit.
    std::vector<int> support;
    /// Real amplitudes indexed like `support`.
    Eigen::VectorXd eigenvector;
    /// Reflect: the attachment sum. Transmit: the common neighbour sum c.
    double constant_c = 0.0;
    /// max |A x - 2cos(k) x| on the subgraph.
    double eigen_residual = 0.0;
};

/// Reflection certificate: the 2cos(k)-eigenspace of G0 contains a vector with
/// nonzero total amplitude on S. Built by projecting the indicator of S.
std::optional<EigenCertificate> lemma1_predict(const Type1Spec &spec, const Momentum &k);

/// Transmission certificate: an eigenvector of g0 (G0 minus S) at 2cos(k)
/// whose neighbour sums into every vertex of S equal one nonzero constant.
std::optional<EigenCertificate> lemma2_predict(const Type1Spec &spec, const Momentum &k);

/// A gadget from a parametric family with its closed-form R/T sets.
struct FamilyGadget {
    Gadget gadget;
    Type1Spec spec;
    std::vector<Momentum> predicted_reflect;
    std::vector<Momentum> predicted_transmit;
    /// All -pi j / q for the denominators appearing in the predictions.
    std::vector<Momentum> natural_grid;
};

/// Path on l1+l2-1 vertices attached at its l1-th vertex.
FamilyGadget path_gadget(int l1, int l2);
/// r-cycle attached at one vertex.
FamilyGadget cycle_gadget(int r);

/// Connected random G0 on n vertices (a random tree plus each remaining pair
/// with probability p) and a random non-empty S; |S| = 1 when `type2`.
/// Deterministic for a given seed on a given standard library.
Type1Spec random_type1_spec(int n, double p, uint64_t seed, bool type2);

/// Two copies of g0 hung from a shared vertex, one copy wired to the
/// connector. Swaps (up to inclusion) the R and T sets of a type-2 gadget.
Type1Spec reversal_spec(const Type1Spec &type2);
Gadget reversal(const Type1Spec &type2);

/// Three-terminal switch: claw with centre 0 and terminals 1, 2, 3; the type-2
/// gadget hangs off terminal 2 and its reversal off terminal 3. Routes the
/// gadget's T set 1 -> 2 and its R set 1 -> 3.
Gadget switch_from_type2(const Type1Spec &type2);

/// An explicit eigenstate on a switch built by switch_from_type2.
struct WitnessState {
    Eigen::VectorXcd amplitudes;
    /// Coefficients of e^{-ikx} and e^{ikx} on each path.
    Eigen::VectorXcd incoming;
    Eigen::VectorXcd outgoing;
};

/// For k in T: unit transmission 1 -> 2 with nothing on path 3. For k in R:
/// unit transmission 1 -> 3 with nothing on path 2. Empty when the matching
/// certificate does not exist.
std::optional<WitnessState> switch_witness_state(const Type1Spec &type2, const Momentum &k);

/// Edge, two-edge path, claw, and the hard-coded gadgets:
/// cgw13_switch, cycle3_switch, basis_change, phase_gadget.
/// Also accepts "approx_switch:<m>", "path:<l1>:<l2>" and "cycle:<r>".
Gadget named_gadget(std::string_view name);

/// e^{i phi} = (2 sqrt2 + i) / 3.
cplx phase_factor();

/// Candidate adjacencies for the eight-vertex phase gadget, preferred first.
/// The drawing it is read from is ambiguous about one spoke.
std::vector<Gadget> phase_gadget_readings();

/// Accepts a reading only if T(-pi/4) = -e^{i phi} and T(-3pi/4) = e^{i phi}.
bool phase_gadget_gate(const Gadget &candidate);

/// First reading that passes the gate.
Gadget phase_gadget();

/// Left basis-change gadget, m phase gadgets in series on the top rail, a
/// two-edge path on the bottom rail, right basis-change gadget. m odd.
Gadget approx_switch(int m);

struct CatalogEntry {
    std::string name;
    int terminals;
    std::string description;
};

std::vector<CatalogEntry> catalog();

}  // namespace qwalk

#endif
