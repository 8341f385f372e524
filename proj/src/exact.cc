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

#include "qwalk/exact.h"

#include <string>

namespace qwalk {

namespace {

// Path amplitudes at these momenta repeat with period 8 in x, so 16 sites
// leave a full period of rows untouched by the cut after three products with H.
constexpr int kPathSites = 16;
constexpr int kCheckedSites = kPathSites - 4;

// k = -pi p / 4.
long quarter_numerator(const Momentum &k) {
    return k.fraction()->p;
}

void require_quarter(const Momentum &k) {
    if (!is_quarter_momentum(k)) {
        throw std::invalid_argument("exact arithmetic supports only k = -pi/4 and -3pi/4, got " + k.str());
    }
}

void alarm_unless(bool ok, const std::string &what) {
    if (!ok) {
        throw FalsificationAlarm(what);
    }
}

Q2Scalar dot_internal(const Q2Vector &x, const Q2Vector &y, int offset) {
    Q2Scalar out;
    for (size_t i = offset; i < x.size(); i++) {
        if (!x[i].is_zero() && !y[i].is_zero()) {
            out += x[i] * y[i];
        }
    }
    return out;
}

RatVector rational_parts(const Q2Vector &v, bool irrational) {
    RatVector out;
    out.reserve(v.size());
    for (const Q2Scalar &x : v) {
        out.push_back(irrational ? x.irr_part() : x.rat_part());
    }
    return out;
}

Q2Complex unit_phase(const Momentum &k, int power) {
    long m = -quarter_numerator(k) * power;
    return Q2Complex(cos_quarter_pi(m), sin_quarter_pi(m));
}

// A_in(j, m), B_out(j, m): coefficients of e^{-ikx} and e^{ikx} on path j in
// basis vector m.
std::pair<Q2ComplexMatrix, Q2ComplexMatrix> path_coefficients(const ExactScatteringBasis &basis) {
    const int n = basis.boundary.path_count();
    const Q2Complex e_plus = unit_phase(basis.momentum, 1);
    const Q2Complex e_minus = unit_phase(basis.momentum, -1);
    const Q2Complex i_unit(Q2Scalar(0), Q2Scalar(1));
    const Q2Complex half(Q2Scalar(mpq_class(1, 2)));
    Q2ComplexMatrix a(n, FieldVector<Q2Complex>(n));
    Q2ComplexMatrix b(n, FieldVector<Q2Complex>(n));
    for (int m = 0; m < n; m++) {
        const Q2Vector &p = basis.scattering[m].parameters;
        for (int j = 0; j < n; j++) {
            Q2Complex kappa(p[j]);
            Q2Complex sigma_i = i_unit * Q2Complex(p[n + j]);
            a[j][m] = half * e_plus * (kappa + sigma_i);
            b[j][m] = half * e_minus * (kappa - sigma_i);
        }
    }
    return {a, b};
}

bool all_zero_on(const Q2Vector &v, const std::vector<bool> &rows) {
    for (size_t i = 0; i < v.size(); i++) {
        if (rows[i] && !v[i].is_zero()) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_quarter_momentum(const Momentum &k) {
    return k.is(1, 4) || k.is(3, 4);
}

Q2Scalar path_amplitude(const Q2Scalar &kappa, const Q2Scalar &sigma, const Momentum &k, int x) {
    require_quarter(k);
    long m = -quarter_numerator(k) * (x - 1);
    return kappa * cos_quarter_pi(m) + sigma * sin_quarter_pi(m);
}

BoundaryMatrix boundary_matrix(const Gadget &gadget, const Momentum &k) {
    require_quarter(k);
    const Graph &g = gadget.graph();
    BoundaryMatrix out{k, gadget.terminals(), {}, {}, {}, {}, {}};
    for (int v = 0; v < gadget.vertex_count(); v++) {
        if (gadget.terminal_index(v) < 0) {
            out.internal.push_back(v);
        }
    }
    const int n = out.path_count();
    const int ni = static_cast<int>(out.internal.size());
    auto block = [&](const std::vector<int> &rows, const std::vector<int> &cols) {
        std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
        for (size_t i = 0; i < rows.size(); i++) {
            for (size_t j = 0; j < cols.size(); j++) {
                m[i][j] = g.has_edge(rows[i], cols[j]) ? 1 : 0;
            }
        }
        return m;
    };
    out.a = block(out.terminals, out.terminals);
    out.b = block(out.terminals, out.internal);
    out.d = block(out.internal, out.internal);

    const long p = quarter_numerator(k);
    const Q2Scalar cos_k = cos_quarter_pi(-p);
    const Q2Scalar sin_k = sin_quarter_pi(-p);
    const Q2Scalar energy = Q2Scalar(2) * cos_k;
    const int cols = out.unknown_count();
    out.assembled.assign(2 * n + ni, Q2Vector(cols));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) {
            out.assembled[i][j] = Q2Scalar(out.a[i][j]) - (i == j ? cos_k : Q2Scalar(0));
        }
        out.assembled[i][n + i] = sin_k;
        for (int w = 0; w < ni; w++) {
            out.assembled[i][2 * n + w] = out.b[i][w];
        }
    }
    for (int w = 0; w < ni; w++) {
        auto &row = out.assembled[2 * n + w];
        for (int j = 0; j < n; j++) {
            row[j] = out.b[j][w];
        }
        for (int v = 0; v < ni; v++) {
            row[2 * n + v] = Q2Scalar(out.d[w][v]) - (w == v ? energy : Q2Scalar(0));
        }
    }
    return out;
}

ExactScatteringBasis exact_scattering_basis(const Gadget &gadget, const Momentum &k) {
    require_quarter(k);
    ExactScatteringBasis out{k, k.is(1, 4) ? 1 : -1, boundary_matrix(gadget, k), {}, {}, {}, {}, kPathSites, {}};
    const BoundaryMatrix &bm = out.boundary;
    const int n = bm.path_count();
    const int ni = static_cast<int>(bm.internal.size());
    const int cols = bm.unknown_count();
    const Q2Scalar root2 = Q2Scalar::sqrt2();
    const Q2Scalar energy = out.sign > 0 ? root2 : -root2;

    out.nullspace = q2_nullspace(bm.assembled);

    // Confined states: iota with B iota = 0 and (D - E) iota = 0.
    Q2Matrix confined_system(n + ni, Q2Vector(ni));
    for (int i = 0; i < n; i++) {
        for (int w = 0; w < ni; w++) {
            confined_system[i][w] = bm.b[i][w];
        }
    }
    for (int w = 0; w < ni; w++) {
        for (int v = 0; v < ni; v++) {
            confined_system[n + w][v] = Q2Scalar(bm.d[w][v]) - (w == v ? energy : Q2Scalar(0));
        }
    }
    for (const Q2Vector &iota : ni ? q2_nullspace(confined_system) : Q2Matrix{}) {
        Q2Vector full(cols);
        std::copy(iota.begin(), iota.end(), full.begin() + 2 * n);
        alarm_unless(all_zero_on(q2_mat_vec(bm.assembled, full), std::vector<bool>(cols, true)),
                     "confined state is not in the nullspace of M");
        out.confined.push_back(std::move(full));
    }

    // Gram-Schmidt against the confined states. They vanish on the paths, so
    // the inner product only sees internal amplitudes.
    Q2Matrix orthogonal;
    for (const Q2Vector &q : out.confined) {
        Q2Vector v = q;
        for (const Q2Vector &o : orthogonal) {
            Q2Scalar f = dot_internal(v, o, 2 * n) / dot_internal(o, o, 2 * n);
            for (int i = 0; i < cols; i++) {
                v[i] -= f * o[i];
            }
        }
        orthogonal.push_back(std::move(v));
    }
    Q2Matrix projected;
    for (const Q2Vector &v0 : out.nullspace) {
        Q2Vector v = v0;
        for (const Q2Vector &o : orthogonal) {
            Q2Scalar f = dot_internal(v, o, 2 * n) / dot_internal(o, o, 2 * n);
            for (int i = 0; i < cols; i++) {
                v[i] -= f * o[i];
            }
        }
        projected.push_back(std::move(v));
    }
    projected = span_basis(std::move(projected), cols);
    alarm_unless(static_cast<int>(projected.size()) == n,
                 "scattering subspace has dimension " + std::to_string(projected.size()) + ", expected " +
                     std::to_string(n));

    out.truncation = attach_truncated_paths(gadget, kPathSites - 1);
    const Graph &h = out.truncation.graph;
    out.checkable.assign(h.vertex_count(), true);
    for (int j = 0; j < n; j++) {
        for (int x = kCheckedSites + 1; x <= kPathSites; x++) {
            out.checkable[out.truncation.site(x, j)] = false;
        }
    }

    for (Q2Vector &params : projected) {
        alarm_unless(all_zero_on(q2_mat_vec(bm.assembled, params), std::vector<bool>(cols, true)),
                     "basis vector is not in the nullspace of M");
        ExactBasisVector e;
        e.tau.assign(h.vertex_count(), Q2Scalar(0));
        for (int w = 0; w < ni; w++) {
            e.tau[bm.internal[w]] = params[2 * n + w];
        }
        for (int j = 0; j < n; j++) {
            for (int x = 1; x <= kPathSites; x++) {
                e.tau[out.truncation.site(x, j)] = path_amplitude(params[j], params[n + j], k, x);
            }
        }
        e.u = rational_parts(e.tau, false);
        e.w = rational_parts(e.tau, true);
        e.parameters = std::move(params);

        // H tau = s sqrt2 tau, H u = 2 s w, H w = s u, tau = s (H + s sqrt2) w.
        Q2Vector h_tau = apply_adjacency(h, e.tau);
        RatVector h_u = apply_adjacency(h, e.u);
        RatVector h_w = apply_adjacency(h, e.w);
        Q2Vector eig(h.vertex_count()), rel_u(h.vertex_count()), rel_w(h.vertex_count()), form(h.vertex_count());
        for (int v = 0; v < h.vertex_count(); v++) {
            eig[v] = h_tau[v] - energy * e.tau[v];
            rel_u[v] = Q2Scalar(h_u[v] - 2 * out.sign * e.w[v]);
            rel_w[v] = Q2Scalar(h_w[v] - out.sign * e.u[v]);
            form[v] = e.tau[v] - Q2Scalar(out.sign) * (Q2Scalar(h_w[v]) + energy * Q2Scalar(e.w[v]));
        }
        alarm_unless(all_zero_on(eig, out.checkable), "basis vector fails the eigenvalue equation");
        alarm_unless(all_zero_on(rel_u, out.checkable), "H u != 2 s w");
        alarm_unless(all_zero_on(rel_w, out.checkable), "H w != s u");
        alarm_unless(all_zero_on(form, out.checkable), "tau != s (H + s sqrt2) w");
        out.scattering.push_back(std::move(e));
    }
    return out;
}

Q2ComplexMatrix exact_s_matrix(const ExactScatteringBasis &basis) {
    auto [a, b] = path_coefficients(basis);
    try {
        return mat_mul(b, inverse(a));
    } catch (const std::domain_error &) {
        throw FalsificationAlarm("incoming coefficients of the scattering basis are singular");
    }
}

ConjugationReport conjugation_check(const Gadget &gadget) {
    if (gadget.terminal_count() != 2) {
        throw std::invalid_argument(
            "conjugation check needs exactly 2 terminals, got " + std::to_string(gadget.terminal_count()));
    }
    const Momentum quarter = Momentum::rational(1, 4);
    ConjugationReport out;
    ExactScatteringBasis basis = exact_scattering_basis(gadget, quarter);
    out.s_quarter = exact_s_matrix(basis);
    out.s_three_quarter = exact_s_matrix(exact_scattering_basis(gadget, Momentum::rational(3, 4)));
    if (!out.s_quarter[1][0].is_zero()) {
        return out;
    }

    // sc_1 = sum_m coeff_m tau_m = (H + sqrt2)(alpha a + beta b).
    auto [a_in, b_out] = path_coefficients(basis);
    Q2ComplexMatrix a_inv = inverse(a_in);
    FieldVector<Q2Complex> coeff{a_inv[0][0], a_inv[1][0]};
    const int first = coeff[0].is_zero() ? 1 : 0;
    const int second = 1 - first;
    ConjugationWitness wit;
    wit.alpha = coeff[first];
    wit.beta = coeff[second];
    Q2Complex ratio = wit.beta / wit.alpha;
    alarm_unless(ratio.is_real(), "beta / alpha is not in Q(sqrt2)");
    wit.r = ratio.re().rat_part();
    wit.s = ratio.re().irr_part();
    wit.a = basis.scattering[first].w;
    wit.b = basis.scattering[second].w;

    const Graph &h = basis.truncation.graph;
    const int nv = h.vertex_count();
    const Q2Scalar root2 = Q2Scalar::sqrt2();
    RatVector h_b = apply_adjacency(h, wit.b);
    wit.c.resize(nv);
    for (int v = 0; v < nv; v++) {
        wit.c[v] = wit.a[v] + wit.r * wit.b[v] + wit.s * h_b[v];
    }
    RatVector h_c = apply_adjacency(h, wit.c);
    RatVector h2_c = apply_adjacency(h, h_c);

    Q2Vector squared(nv), reproduce(nv);
    wit.conjugated_state.resize(nv);
    for (int v = 0; v < nv; v++) {
        squared[v] = Q2Scalar(h2_c[v] - 2 * wit.c[v]);
        wit.conjugated_state[v] = Q2Scalar(h_c[v], -wit.c[v]);
        Q2Complex sc1;
        for (int m = 0; m < 2; m++) {
            sc1 += coeff[m] * Q2Complex(basis.scattering[m].tau[v]);
        }
        Q2Complex lhs = wit.alpha * Q2Complex(Q2Scalar(h_c[v], wit.c[v]));
        Q2Complex diff = lhs - sc1;
        reproduce[v] = diff.re() * diff.re() + diff.im() * diff.im();
    }
    alarm_unless(all_zero_on(squared, basis.checkable), "c is not a 2-eigenvector of H^2");
    alarm_unless(all_zero_on(reproduce, basis.checkable), "alpha (H + sqrt2) c does not reproduce sc_1");

    Q2Vector h_conj = apply_adjacency(h, wit.conjugated_state);
    Q2Vector eig(nv);
    for (int v = 0; v < nv; v++) {
        eig[v] = h_conj[v] + root2 * wit.conjugated_state[v];
    }
    alarm_unless(all_zero_on(eig, basis.checkable), "(H - sqrt2) c is not a -sqrt2 eigenvector");
    for (int x = 1; x <= kCheckedSites; x++) {
        alarm_unless(wit.conjugated_state[basis.truncation.site(x, 1)].is_zero(),
                     "(H - sqrt2) c has amplitude on path 2");
    }
    for (int x = 1; x <= kCheckedSites && wit.path1_site == 0; x++) {
        if (!wit.conjugated_state[basis.truncation.site(x, 0)].is_zero()) {
            wit.path1_site = x;
        }
    }
    alarm_unless(wit.path1_site != 0, "(H - sqrt2) c vanishes on path 1");
    alarm_unless(out.s_three_quarter[1][0].is_zero(),
                 "conjugated witness exists but the exact transmission at -3pi/4 is nonzero");

    out.verdict = ConjugationReport::Verdict::confirmed;
    out.witness = std::move(wit);
    out.basis = std::move(basis);
    return out;
}

}  // namespace qwalk
