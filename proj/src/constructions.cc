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

#include "qwalk/constructions.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qwalk {

namespace {

constexpr double kNonzero = 1e-9;
constexpr double kSolveResidual = 1e-8;

// Orthonormal basis (columns) of the eigenspace of `a` for eigenvalue near `energy`.
Eigen::MatrixXd eigenspace(const Eigen::MatrixXd &a, double energy) {
    if (a.rows() == 0) {
        return Eigen::MatrixXd(0, 0);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
    std::vector<int> cols;
    for (int i = 0; i < eig.eigenvalues().size(); i++) {
        if (std::abs(eig.eigenvalues()(i) - energy) < kEigenvalueMatch) {
            cols.push_back(i);
        }
    }
    Eigen::MatrixXd q(a.rows(), static_cast<Eigen::Index>(cols.size()));
    for (size_t c = 0; c < cols.size(); c++) {
        q.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(cols[c]);
    }
    return q;
}

std::vector<Momentum> sorted_unique(std::vector<Momentum> ks) {
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    return ks;
}

Graph path_graph(int vertices) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < vertices; i++) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(vertices, std::move(edges));
}

Graph cycle_graph(int r) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < r; i++) {
        edges.emplace_back(i, (i + 1) % r);
    }
    return Graph(r, std::move(edges));
}

Gadget from_edges(int n, std::vector<std::pair<int, int>> edges, std::vector<int> terminals, std::string name) {
    return Gadget(Graph(n, std::move(edges)), std::move(terminals), std::move(name));
}

void require_type2(const Type1Spec &spec) {
    spec.validate();
    if (!spec.is_type2()) {
        throw std::invalid_argument(
            "construction needs a type-2 spec (|S| = 1), got |S| = " + std::to_string(spec.attach.size()));
    }
}

}  // namespace

void Type1Spec::validate() const {
    if (attach.empty()) {
        throw std::invalid_argument("attachment set S must be non-empty");
    }
    std::vector<int> seen(g0.vertex_count(), 0);
    for (int v : attach) {
        if (v < 0 || v >= g0.vertex_count()) {
            throw std::invalid_argument("attachment vertex " + std::to_string(v) + " is not in G0");
        }
        if (seen[v]++) {
            throw std::invalid_argument("attachment vertex " + std::to_string(v) + " listed twice");
        }
    }
}

std::vector<int> Type1Spec::inner_vertices() const {
    std::vector<int> inner;
    for (int v = 0; v < g0.vertex_count(); v++) {
        if (std::find(attach.begin(), attach.end(), v) == attach.end()) {
            inner.push_back(v);
        }
    }
    return inner;
}

Gadget build_type1(const Type1Spec &spec) {
    spec.validate();
    const int n0 = spec.g0.vertex_count();
    const int a = n0;
    std::vector<std::pair<int, int>> edges;
    for (const Edge &e : spec.g0.edges()) {
        edges.emplace_back(e.u, e.v);
    }
    for (int v : spec.attach) {
        edges.emplace_back(a, v);
    }
    edges.emplace_back(n0 + 1, a);
    edges.emplace_back(n0 + 2, a);
    return Gadget(Graph(n0 + 3, std::move(edges)), {n0 + 1, n0 + 2});
}

Type1Spec spec_from_gadget(const Gadget &g0_with_attach) {
    Type1Spec spec{g0_with_attach.graph(), g0_with_attach.terminals()};
    spec.validate();
    return spec;
}

Gadget spec_to_gadget(const Type1Spec &spec) {
    return Gadget(spec.g0, spec.attach);
}

std::optional<EigenCertificate> lemma1_predict(const Type1Spec &spec, const Momentum &k) {
    spec.validate();
    const Eigen::MatrixXd a = spec.g0.adjacency();
    const Eigen::MatrixXd q = eigenspace(a, k.energy());
    if (q.cols() == 0) {
        return std::nullopt;
    }
    Eigen::VectorXd indicator = Eigen::VectorXd::Zero(spec.g0.vertex_count());
    for (int v : spec.attach) {
        indicator(v) = 1.0;
    }
    // The projection of 1_S maximises the attachment sum over the eigenspace;
    // the sum is zero on the whole eigenspace iff the projection vanishes.
    Eigen::VectorXd chi = q * (q.transpose() * indicator);
    double norm = chi.norm();
    if (norm * norm < kNonzero) {
        return std::nullopt;
    }
    chi /= norm;
    EigenCertificate cert{EigenCertificate::Kind::reflect, k, {}, chi, indicator.dot(chi), 0.0};
    for (int v = 0; v < spec.g0.vertex_count(); v++) {
        cert.support.push_back(v);
    }
    cert.eigen_residual = (a * chi - k.energy() * chi).cwiseAbs().maxCoeff();
    return cert;
}

std::optional<EigenCertificate> lemma2_predict(const Type1Spec &spec, const Momentum &k) {
    spec.validate();
    const std::vector<int> inner = spec.inner_vertices();
    if (inner.empty()) {
        return std::nullopt;
    }
    const Eigen::MatrixXd a = spec.g0.induced_subgraph(inner).adjacency();
    const Eigen::MatrixXd q = eigenspace(a, k.energy());
    if (q.cols() == 0) {
        return std::nullopt;
    }
    // Row i: which inner vertices neighbour the i-th attachment vertex.
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(spec.attach.size()), a.rows());
    for (size_t i = 0; i < spec.attach.size(); i++) {
        for (size_t u = 0; u < inner.size(); u++) {
            if (spec.g0.has_edge(spec.attach[i], inner[u])) {
                b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(u)) = 1.0;
            }
        }
    }
    // Look for xi = Q y with B xi = (1, ..., 1); any common c != 0 rescales to 1.
    const Eigen::MatrixXd c = b * q;
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(c.rows());
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(c);
    cod.setThreshold(1e-10);
    Eigen::VectorXd y = cod.solve(ones);
    if ((c * y - ones).cwiseAbs().maxCoeff() > kSolveResidual) {
        return std::nullopt;
    }
    Eigen::VectorXd xi = q * y;
    double norm = xi.norm();
    xi /= norm;
    EigenCertificate cert{EigenCertificate::Kind::transmit, k, inner, xi, 1.0 / norm, 0.0};
    cert.eigen_residual = (a * xi - k.energy() * xi).cwiseAbs().maxCoeff();
    if (std::abs(cert.constant_c) < kNonzero) {
        return std::nullopt;
    }
    return cert;
}

FamilyGadget path_gadget(int l1, int l2) {
    if (l1 < 2 || l2 < 2) {
        throw std::invalid_argument("path gadget needs l1, l2 >= 2");
    }
    const int total = l1 + l2;
    Type1Spec spec{path_graph(total - 1), {l1 - 1}};
    FamilyGadget out{build_type1(spec), spec, {}, {}, momentum_grid({l1, l2, total})};
    for (int j = 1; j < total; j++) {
        if ((j * l1) % total != 0) {
            out.predicted_reflect.push_back(Momentum::rational(j, total));
        }
    }
    for (int j = 1; j < l1; j++) {
        out.predicted_transmit.push_back(Momentum::rational(j, l1));
    }
    for (int j = 1; j < l2; j++) {
        out.predicted_transmit.push_back(Momentum::rational(j, l2));
    }
    out.predicted_reflect = sorted_unique(std::move(out.predicted_reflect));
    out.predicted_transmit = sorted_unique(std::move(out.predicted_transmit));
    return out;
}

FamilyGadget cycle_gadget(int r) {
    if (r < 3) {
        throw std::invalid_argument("cycle gadget needs r >= 3");
    }
    Type1Spec spec{cycle_graph(r), {r - 1}};
    FamilyGadget out{build_type1(spec), spec, {}, {}, momentum_grid(r)};
    for (int j = 1; j < r; j++) {
        (j % 2 == 0 ? out.predicted_reflect : out.predicted_transmit).push_back(Momentum::rational(j, r));
    }
    out.predicted_reflect = sorted_unique(std::move(out.predicted_reflect));
    out.predicted_transmit = sorted_unique(std::move(out.predicted_transmit));
    return out;
}

Type1Spec random_type1_spec(int n, double p, uint64_t seed, bool type2) {
    if (n < 1) {
        throw std::invalid_argument("random G0 needs at least one vertex");
    }
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    auto uniform = [&]() { return std::generate_canonical<double, 53>(rng); };
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; v++) {
        edges.emplace_back(static_cast<int>(rng() % static_cast<uint64_t>(v)), v);
    }
    Graph tree(n, edges);
    for (int u = 0; u < n; u++) {
        for (int v = u + 1; v < n; v++) {
            if (!tree.has_edge(u, v) && uniform() < p) {
                edges.emplace_back(u, v);
            }
        }
    }
    std::vector<int> attach;
    if (type2) {
        attach.push_back(static_cast<int>(rng() % static_cast<uint64_t>(n)));
    } else {
        for (int v = 0; v < n; v++) {
            if (uniform() < 0.5) {
                attach.push_back(v);
            }
        }
        if (attach.empty()) {
            attach.push_back(static_cast<int>(rng() % static_cast<uint64_t>(n)));
        }
    }
    return Type1Spec{Graph(n, std::move(edges)), std::move(attach)};
}

Type1Spec reversal_spec(const Type1Spec &type2) {
    require_type2(type2);
    const int v = type2.attach[0];
    const std::vector<int> inner = type2.inner_vertices();
    const Graph g0 = type2.g0.induced_subgraph(inner);
    const int m = g0.vertex_count();
    const int hub = 2 * m;

    std::vector<std::pair<int, int>> edges;
    for (int copy = 0; copy < 2; copy++) {
        for (const Edge &e : g0.edges()) {
            edges.emplace_back(e.u + copy * m, e.v + copy * m);
        }
    }
    std::vector<int> attach;
    for (int i = 0; i < m; i++) {
        if (type2.g0.has_edge(v, inner[i])) {
            edges.emplace_back(hub, i);
            edges.emplace_back(hub, i + m);
            attach.push_back(i);
        }
    }
    return Type1Spec{Graph(2 * m + 1, std::move(edges)), std::move(attach)};
}

Gadget reversal(const Type1Spec &type2) {
    return build_type1(reversal_spec(type2));
}

Gadget switch_from_type2(const Type1Spec &type2) {
    require_type2(type2);
    const Type1Spec rev = reversal_spec(type2);
    const int n0 = type2.g0.vertex_count();
    const int type2_base = 4;
    const int rev_base = type2_base + n0;

    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}};
    for (const Edge &e : type2.g0.edges()) {
        edges.emplace_back(e.u + type2_base, e.v + type2_base);
    }
    edges.emplace_back(2, type2.attach[0] + type2_base);
    for (const Edge &e : rev.g0.edges()) {
        edges.emplace_back(e.u + rev_base, e.v + rev_base);
    }
    for (int w : rev.attach) {
        edges.emplace_back(3, w + rev_base);
    }
    return Gadget(Graph(rev_base + rev.g0.vertex_count(), std::move(edges)), {1, 2, 3});
}

std::optional<WitnessState> switch_witness_state(const Type1Spec &type2, const Momentum &k) {
    require_type2(type2);
    const Gadget sw = switch_from_type2(type2);
    const int n0 = type2.g0.vertex_count();
    const int type2_base = 4;
    const int rev_base = type2_base + n0;
    const std::vector<int> inner = type2.inner_vertices();
    const int m = static_cast<int>(inner.size());
    const int hub = rev_base + 2 * m;
    const int v = type2.attach[0];
    const cplx e1 = std::polar(1.0, k.value());

    WitnessState out{
        Eigen::VectorXcd::Zero(sw.vertex_count()), Eigen::VectorXcd::Zero(3), Eigen::VectorXcd::Zero(3)};
    out.incoming(0) = 1.0;
    out.amplitudes(0) = 1.0;
    out.amplitudes(1) = std::conj(e1);

    if (auto cert = lemma2_predict(type2, k)) {
        // Path 1 -> 2. g0 copies carry -xi/c, +xi/c (reversal) and -e^{ik} xi/c
        // (type-2 part); v and the reversal hub stay at zero.
        out.outgoing(1) = 1.0;
        out.amplitudes(2) = e1;
        const double c = cert->constant_c;
        for (int i = 0; i < m; i++) {
            double xi = cert->eigenvector(i);
            out.amplitudes(rev_base + i) = -xi / c;
            out.amplitudes(rev_base + m + i) = xi / c;
            out.amplitudes(type2_base + inner[i]) = -e1 * xi / c;
        }
        return out;
    }
    if (auto cert = lemma1_predict(type2, k)) {
        // Path 1 -> 3. The type-2 copy of G0 carries -chi/chi_v so that the
        // terminal-2 vertex stays at zero; the reversal's second g0 copy and hub
        // carry -e^{ik} chi/chi_v with the first copy at zero.
        out.outgoing(2) = 1.0;
        out.amplitudes(3) = e1;
        const Eigen::VectorXd &chi = cert->eigenvector;
        const double chi_v = chi(v);
        if (std::abs(chi_v) < kNonzero) {
            return std::nullopt;
        }
        for (int u = 0; u < n0; u++) {
            out.amplitudes(type2_base + u) = -chi(u) / chi_v;
        }
        for (int i = 0; i < m; i++) {
            out.amplitudes(rev_base + m + i) = -e1 * chi(inner[i]) / chi_v;
        }
        out.amplitudes(hub) = -e1;
        return out;
    }
    return std::nullopt;
}

namespace {

Gadget claw() {
    return from_edges(4, {{0, 1}, {0, 2}, {0, 3}}, {1, 2, 3}, "claw");
}

Gadget cgw13_switch() {
    // Terminals in path order 1, 2, 3.
    return from_edges(
        13,
        {{1, 3}, {3, 4}, {2, 6}, {0, 5}, {5, 3}, {5, 6}, {6, 4}, {6, 7}, {7, 8}, {7, 9}, {10, 4}, {10, 11}, {10, 12}},
        {1, 2, 0},
        "cgw13_switch");
}

Gadget cycle3_switch() {
    // Centre 0, terminals 1-3; triangle 4-5-6 off terminal 2; reversal assembly
    // 7..11 off terminal 3 with hub 9.
    return from_edges(
        12,
        {{0, 1},
         {0, 2},
         {0, 3},
         {2, 4},
         {4, 5},
         {5, 6},
         {6, 4},
         {3, 7},
         {3, 8},
         {7, 8},
         {7, 9},
         {8, 9},
         {9, 10},
         {9, 11},
         {10, 11}},
        {1, 2, 3},
        "cycle3_switch");
}

Gadget basis_change() {
    // Terminals (1,1), (1,2) on the left and (1,3), (1,4) on the right.
    return from_edges(
        10,
        {{7, 1}, {8, 2}, {3, 9}, {4, 0}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 6}, {4, 6}},
        {7, 8, 9, 0},
        "basis_change");
}

}  // namespace

std::vector<Gadget> phase_gadget_readings() {
    // 0 left terminal, 1 right terminal, 2 centre, 3/4 upper/lower-left corner,
    // 5/6 upper/lower-right corner, 7 the vertex on the lower-left spoke.
    const std::vector<std::pair<int, int>> common{
        {2, 3}, {3, 0}, {0, 4}, {2, 5}, {5, 1}, {1, 6}, {6, 2}, {0, 2}, {4, 6}, {7, 6}};
    auto with = [&](std::vector<std::pair<int, int>> extra) {
        auto edges = common;
        edges.insert(edges.end(), extra.begin(), extra.end());
        return from_edges(8, std::move(edges), {0, 1}, "phase_gadget");
    };
    return {
        with({{2, 7}, {7, 4}}),  // spoke subdivided by 7
        with({{2, 4}, {2, 7}}),  // spoke intact, 7 hangs off the centre
        with({{2, 4}, {7, 4}}),  // spoke intact, 7 hangs off the corner
    };
}

cplx phase_factor() {
    return cplx(2.0 * std::numbers::sqrt2 / 3.0, 1.0 / 3.0);
}

bool phase_gadget_gate(const Gadget &candidate) {
    const cplx t1 = s_matrix(candidate, Momentum::rational(1, 4)).entries(1, 0);
    const cplx t3 = s_matrix(candidate, Momentum::rational(3, 4)).entries(1, 0);
    return std::abs(t1 + phase_factor()) < kPerfectTolerance && std::abs(t3 - phase_factor()) < kPerfectTolerance;
}

Gadget phase_gadget() {
    static const Gadget accepted = [] {
        for (const Gadget &g : phase_gadget_readings()) {
            if (phase_gadget_gate(g)) {
                return g;
            }
        }
        throw std::logic_error("no phase gadget reading reproduces the required transmission coefficients");
    }();
    return accepted;
}

Gadget approx_switch(int m) {
    if (m < 1 || m % 2 == 0) {
        throw std::invalid_argument("approximate switch needs an odd m >= 1, got " + std::to_string(m));
    }
    const Gadget ph = phase_gadget();
    Gadget chain = ph;
    for (int i = 1; i < m; i++) {
        chain = series_merge(chain, 1, ph, 0);
    }
    const Gadget bottom = from_edges(3, {{0, 1}, {1, 2}}, {0, 2}, "");
    // Box terminals: top-left, top-right, bottom-left, bottom-right.
    const Gadget box = disjoint_union(chain, bottom);
    const Gadget bc = basis_change();
    const int bc_right[] = {2, 3};
    const int bc_left[] = {0, 1};
    const int box_left[] = {0, 2};
    Gadget left = series_merge(bc, bc_right, box, box_left);
    // left's terminals: (1,1), (1,2), top-right, bottom-right.
    Gadget full = series_merge(left, bc_right, bc, bc_left);
    return Gadget(full.graph(), full.terminals(), "approx_switch:" + std::to_string(m));
}

Gadget named_gadget(std::string_view name) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t colon = name.find(':', start);
        parts.emplace_back(name.substr(start, colon == std::string_view::npos ? std::string_view::npos : colon - start));
        if (colon == std::string_view::npos) {
            break;
        }
        start = colon + 1;
    }
    auto int_arg = [&](size_t i) {
        try {
            size_t used = 0;
            int v = std::stoi(parts.at(i), &used);
            if (used != parts[i].size()) {
                throw std::invalid_argument("");
            }
            return v;
        } catch (const std::exception &) {
            throw std::invalid_argument("bad parameter in gadget name '" + std::string(name) + "'");
        }
    };
    auto arity = [&](size_t n) {
        if (parts.size() != n + 1) {
            throw std::invalid_argument("gadget '" + parts[0] + "' takes " + std::to_string(n) + " parameter(s)");
        }
    };
    const std::string &base = parts[0];
    if (base == "edge") {
        arity(0);
        return from_edges(2, {{0, 1}}, {0, 1}, "edge");
    }
    if (base == "two_edge_path") {
        arity(0);
        return from_edges(3, {{0, 1}, {1, 2}}, {0, 2}, "two_edge_path");
    }
    if (base == "claw") {
        arity(0);
        return claw();
    }
    if (base == "cgw13_switch") {
        arity(0);
        return cgw13_switch();
    }
    if (base == "cycle3_switch") {
        arity(0);
        return cycle3_switch();
    }
    if (base == "basis_change") {
        arity(0);
        return basis_change();
    }
    if (base == "phase_gadget") {
        arity(0);
        return phase_gadget();
    }
    if (base == "approx_switch") {
        arity(1);
        return approx_switch(int_arg(1));
    }
    if (base == "path") {
        arity(2);
        Gadget g = path_gadget(int_arg(1), int_arg(2)).gadget;
        return Gadget(g.graph(), g.terminals(), std::string(name));
    }
    if (base == "cycle") {
        arity(1);
        Gadget g = cycle_gadget(int_arg(1)).gadget;
        return Gadget(g.graph(), g.terminals(), std::string(name));
    }
    throw std::invalid_argument("unknown gadget '" + std::string(name) + "'");
}

std::vector<CatalogEntry> catalog() {
    return {
        {"edge", 2, "single edge, both endpoints terminals; R = 0, T = e^{-ik}"},
        {"two_edge_path", 2, "path with two edges; T = 1 at every momentum"},
        {"claw", 3, "star with three terminal leaves"},
        {"cgw13_switch", 3, "13-vertex momentum switch: -pi/2 routes 1->2, -pi/4 routes 1->3"},
        {"cycle3_switch", 3, "switch built from the 3-cycle gadget and its reversal: -pi/3 routes 1->2, -2pi/3 routes 1->3"},
        {"basis_change", 4, "basis-changing gate: S = [[0,U],[U,0]] at -pi/4 and [[0,-U*],[-U*,0]] at -3pi/4"},
        {"phase_gadget", 2, "perfect transmission at -pi/4 and -3pi/4 with coefficients -e^{i phi}, e^{i phi}, e^{i phi} = (2 sqrt2 + i)/3"},
        {"approx_switch:<m>", 4, "approximate -pi/4 / -3pi/4 switch with m (odd) phase gadgets on the top rail"},
        {"path:<l1>:<l2>", 2, "path on l1+l2-1 vertices attached at vertex l1 (type 2 R/T family)"},
        {"cycle:<r>", 2, "r-cycle attached at one vertex (type 2 R/T family)"},
    };
}

}  // namespace qwalk
