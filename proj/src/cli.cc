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

#include "qwalk/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/approx.h"
#include "qwalk/constructions.h"
#include "qwalk/dynamics.h"
#include "qwalk/exact.h"
#include "qwalk/scatter.h"

namespace qwalk::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string gadget;
    std::vector<std::string> k;
    double tol = kPerfectTolerance;
    std::string format = "json";
    std::string out;
    uint64_t seed = 0;
    int max_m = 400;
    bool validate = false;
    std::optional<int> length;
    double sigma = 10.0;
    std::vector<std::string> d;
    std::vector<std::string> dp;
    int grid = 0;
    int arm = 0;
    std::optional<double> center;
    std::optional<double> time;
    int samples = 50;
    std::string sidecar;
    bool witness = false;
    int random_n = 0;
    double random_p = 0.3;
    bool type2 = false;
    bool spec_only = false;
};

json complex_json(cplx z) {
    return json::array({z.real(), z.imag()});
}

json q2_complex_json(const Q2Complex &z) {
    return json::array({z.re().str(), z.im().str()});
}

json rational_vector_json(const RatVector &v) {
    json out = json::array();
    for (const mpq_class &x : v) {
        out.push_back(x.get_str());
    }
    return out;
}

json q2_vector_json(const Q2Vector &v) {
    json out = json::array();
    for (const Q2Scalar &x : v) {
        out.push_back(x.str());
    }
    return out;
}

json momenta_json(const std::vector<Momentum> &ks) {
    json out = json::array();
    for (const Momentum &k : ks) {
        out.push_back(k.str());
    }
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_file(const std::string &ref) {
    std::error_code ec;
    return std::filesystem::is_regular_file(ref, ec);
}

Gadget resolve_gadget(const std::string &ref) {
    if (ref.empty()) {
        throw InputError("--gadget is required");
    }
    if (is_file(ref)) {
        return load_gadget(read_file(ref));
    }
    return named_gadget(ref);
}

std::optional<FamilyGadget> resolve_family(const std::string &ref) {
    int a = 0;
    int b = 0;
    char tail = 0;
    if (std::sscanf(ref.c_str(), "path:%d:%d%c", &a, &b, &tail) == 2) {
        return path_gadget(a, b);
    }
    if (std::sscanf(ref.c_str(), "cycle:%d%c", &a, &tail) == 1) {
        return cycle_gadget(a);
    }
    return std::nullopt;
}

// A spec is G0 with S given as the terminal list, or a family name.
Type1Spec resolve_spec(const std::string &ref) {
    if (ref.empty()) {
        throw InputError("--gadget is required");
    }
    if (is_file(ref)) {
        return spec_from_gadget(load_gadget(read_file(ref)));
    }
    if (auto family = resolve_family(ref)) {
        return family->spec;
    }
    throw InputError("'" + ref + "' is neither a spec file nor a path:<l1>:<l2> / cycle:<r> family");
}

std::vector<Momentum> parse_momenta(const std::vector<std::string> &texts) {
    std::vector<Momentum> out;
    for (const std::string &t : texts) {
        out.push_back(Momentum::parse(t));
    }
    return out;
}

std::string gadget_label(const Gadget &g, const std::string &ref) {
    return g.name().empty() ? ref : g.name();
}

void require_format(const Options &o, std::initializer_list<const char *> allowed) {
    for (const char *f : allowed) {
        if (o.format == f) {
            return;
        }
    }
    throw InputError("format '" + o.format + "' is not supported by this subcommand");
}

void csv_number(std::ostream &os, double x) {
    os << std::setprecision(17) << x;
}

int cmd_build(const Options &o, std::ostream &os) {
    require_format(o, {"json"});
    if (o.random_n > 0) {
        Type1Spec spec = random_type1_spec(o.random_n, o.random_p, o.seed, o.type2);
        os << save_gadget(o.spec_only ? spec_to_gadget(spec) : build_type1(spec));
        return kExitOk;
    }
    os << save_gadget(resolve_gadget(o.gadget));
    if (!o.sidecar.empty()) {
        std::optional<FamilyGadget> family = is_file(o.gadget) ? std::nullopt : resolve_family(o.gadget);
        if (!family) {
            throw InputError("--sidecar needs a path:<l1>:<l2> or cycle:<r> family");
        }
        auto pairs = [](const std::vector<Momentum> &ks) {
            json a = json::array();
            for (const Momentum &k : ks) {
                a.push_back({k.fraction()->p, k.fraction()->q});
            }
            return a;
        };
        json side = {{"gadget", o.gadget},
                     {"reflect", pairs(family->predicted_reflect)},
                     {"transmit", pairs(family->predicted_transmit)}};
        std::ofstream file(o.sidecar, std::ios::binary);
        if (!file || !(file << side.dump(2) << "\n")) {
            throw InputError("cannot write '" + o.sidecar + "'");
        }
    }
    return kExitOk;
}

int cmd_smatrix(const Options &o, std::ostream &os) {
    require_format(o, {"json", "csv"});
    const Gadget g = resolve_gadget(o.gadget);
    const std::vector<Momentum> ks = parse_momenta(o.k);
    if (ks.empty()) {
        throw InputError("at least one --k is required");
    }
    if (o.format == "csv") {
        os << "k,row,col,re,im,abs\n";
        for (const Momentum &k : ks) {
            SMatrix s = s_matrix(g, k);
            for (int r = 0; r < s.entries.rows(); r++) {
                for (int c = 0; c < s.entries.cols(); c++) {
                    cplx z = s.entries(r, c);
                    os << k.str() << "," << r + 1 << "," << c + 1 << ",";
                    csv_number(os, z.real());
                    os << ",";
                    csv_number(os, z.imag());
                    os << ",";
                    csv_number(os, std::abs(z));
                    os << "\n";
                }
            }
        }
        return kExitOk;
    }
    json results = json::array();
    for (const Momentum &k : ks) {
        SMatrix s = s_matrix(g, k);
        json rows = json::array();
        for (int r = 0; r < s.entries.rows(); r++) {
            json row = json::array();
            for (int c = 0; c < s.entries.cols(); c++) {
                row.push_back(complex_json(s.entries(r, c)));
            }
            rows.push_back(row);
        }
        results.push_back({{"k", k.str()},
                           {"k_value", k.value()},
                           {"S", rows},
                           {"unitarity_error", s.unitarity_error()},
                           {"symmetry_error", s.symmetry_error()}});
    }
    json doc = {{"gadget", gadget_label(g, o.gadget)}, {"terminals", g.terminal_count()}, {"results", results}};
    os << doc.dump(2) << "\n";
    return kExitOk;
}

std::vector<Momentum> grid_from(const Options &o) {
    std::vector<Momentum> ks = parse_momenta(o.k);
    if (o.grid > 0) {
        if (o.grid < 2) {
            throw InputError("--grid needs q >= 2");
        }
        auto g = momentum_grid(o.grid);
        ks.insert(ks.end(), g.begin(), g.end());
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (ks.empty()) {
        throw InputError("give momenta with --k or --grid");
    }
    return ks;
}

int cmd_classify(const Options &o, std::ostream &os) {
    require_format(o, {"json", "csv"});
    const Gadget g = resolve_gadget(o.gadget);
    const std::vector<Momentum> ks = grid_from(o);
    RTClassification c = classify_rt(g, ks, o.tol);
    if (o.format == "csv") {
        os << "k,abs_r,abs_t,reflect,transmit\n";
        for (const Momentum &k : ks) {
            auto s = scattering_solve(g, k, 0).s_row;
            bool r = std::find(c.reflect_set.begin(), c.reflect_set.end(), k) != c.reflect_set.end();
            bool t = std::find(c.transmit_set.begin(), c.transmit_set.end(), k) != c.transmit_set.end();
            os << k.str() << ",";
            csv_number(os, std::abs(s(0)));
            os << ",";
            csv_number(os, std::abs(s(1)));
            os << "," << (r ? 1 : 0) << "," << (t ? 1 : 0) << "\n";
        }
        return kExitOk;
    }
    json doc = {{"gadget", gadget_label(g, o.gadget)},
                {"tolerance", o.tol},
                {"grid", momenta_json(ks)},
                {"reflect", momenta_json(c.reflect_set)},
                {"transmit", momenta_json(c.transmit_set)}};
    os << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_check_switch(const Options &o, std::ostream &os) {
    require_format(o, {"json"});
    const Gadget g = resolve_gadget(o.gadget);
    const auto d = parse_momenta(o.d);
    const auto dp = parse_momenta(o.dp);
    if (d.empty() || dp.empty()) {
        throw InputError("--D and --Dp are both required");
    }
    SwitchVerdict v = is_momentum_switch(g, d, dp, o.tol);
    json dj = json::array();
    for (size_t i = 0; i < d.size(); i++) {
        dj.push_back({{"k", d[i].str()}, {"abs_s12", v.transmit_12[i]}});
    }
    json dpj = json::array();
    for (size_t i = 0; i < dp.size(); i++) {
        dpj.push_back({{"k", dp[i].str()}, {"abs_s13", v.transmit_13[i]}});
    }
    json doc = {{"gadget", gadget_label(g, o.gadget)},
                {"tolerance", o.tol},
                {"is_switch", v.is_switch},
                {"D", dj},
                {"Dp", dpj}};
    os << doc.dump(2) << "\n";
    return v.is_switch ? kExitOk : kExitVerificationFailure;
}

int cmd_reversal(const Options &o, std::ostream &os) {
    require_format(o, {"json"});
    os << save_gadget(reversal(resolve_spec(o.gadget)));
    return kExitOk;
}

int cmd_switch_from(const Options &o, std::ostream &os) {
    require_format(o, {"json"});
    const Type1Spec spec = resolve_spec(o.gadget);
    const Gadget sw = switch_from_type2(spec);
    if (!o.witness) {
        os << save_gadget(sw);
        return kExitOk;
    }
    const auto ks = parse_momenta(o.k);
    if (ks.empty()) {
        throw InputError("--witness needs at least one --k");
    }
    bool ok = true;
    json wj = json::array();
    for (const Momentum &k : ks) {
        auto w = switch_witness_state(spec, k);
        if (!w) {
            wj.push_back({{"k", k.str()}, {"route", nullptr}, {"residual", nullptr}});
            ok = false;
            continue;
        }
        double res = eigen_residual(sw, k, w->amplitudes, w->incoming, w->outgoing);
        ok = ok && res < 1e-10;
        wj.push_back({{"k", k.str()}, {"route", std::abs(w->outgoing(1)) > 0 ? "1->2" : "1->3"}, {"residual", res}});
    }
    json doc = {{"gadget", json::parse(save_gadget(sw))}, {"witness", wj}};
    os << doc.dump(2) << "\n";
    return ok ? kExitOk : kExitVerificationFailure;
}

int cmd_exact_check(const Options &o, std::ostream &os) {
    require_format(o, {"json"});
    const Gadget g = resolve_gadget(o.gadget);
    ConjugationReport r = conjugation_check(g);
    auto matrix = [](const Q2ComplexMatrix &m) {
        json rows = json::array();
        for (const auto &row : m) {
            json jr = json::array();
            for (const Q2Complex &z : row) {
                jr.push_back(q2_complex_json(z));
            }
            rows.push_back(jr);
        }
        return rows;
    };
    json doc = {{"gadget", gadget_label(g, o.gadget)},
                {"verdict", r.verdict == ConjugationReport::Verdict::confirmed ? "confirmed" : "not-applicable"},
                {"s_quarter", matrix(r.s_quarter)},
                {"s_three_quarter", matrix(r.s_three_quarter)}};
    if (o.witness && r.witness) {
        const ConjugationWitness &w = *r.witness;
        doc["witness"] = {{"alpha", q2_complex_json(w.alpha)},
                          {"beta", q2_complex_json(w.beta)},
                          {"r", w.r.get_str()},
                          {"s", w.s.get_str()},
                          {"path1_site", w.path1_site},
                          {"path_sites", r.basis->path_sites},
                          {"a", rational_vector_json(w.a)},
                          {"b", rational_vector_json(w.b)},
                          {"c", rational_vector_json(w.c)},
                          {"conjugated_state", q2_vector_json(w.conjugated_state)}};
    }
    os << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_approx_search(Options o, std::ostream &os, bool tol_given, bool format_given) {
    if (!format_given) {
        o.format = "csv";
    }
    require_format(o, {"csv", "json"});
    if (o.max_m < 1) {
        throw InputError("--max-m must be at least 1");
    }
    const double tol = tol_given ? o.tol : 1e-8;
    const auto rows = scan_odd_m(o.max_m);
    // Graph cross-checks are dense solves; keep them to small m.
    std::vector<std::optional<double>> deviation(rows.size());
    bool ok = true;
    if (o.validate) {
        for (size_t i = 0; i < rows.size(); i++) {
            if (rows[i].m <= 5 || (rows[i].is_record && rows[i].m <= 41)) {
                GraphValidation v = validate_against_graph(rows[i].m, tol);
                deviation[i] = v.deviation;
                ok = ok && v.passed;
            }
        }
    }
    if (o.format == "json") {
        json records = json::array();
        for (size_t i = 0; i < rows.size(); i++) {
            if (!rows[i].is_record && !deviation[i]) {
                continue;
            }
            json r = {{"m", rows[i].m},
                      {"error_spectral", rows[i].error},
                      {"error_frobenius", rows[i].error_frobenius},
                      {"is_record", rows[i].is_record}};
            if (deviation[i]) {
                r["graph_deviation"] = *deviation[i];
            }
            records.push_back(r);
        }
        json doc = {{"max_m", o.max_m}, {"rows", records}};
        os << doc.dump(2) << "\n";
    } else {
        os << "m,error_spectral,error_frobenius,is_record" << (o.validate ? ",graph_deviation" : "") << "\n";
        for (size_t i = 0; i < rows.size(); i++) {
            os << rows[i].m << ",";
            csv_number(os, rows[i].error);
            os << ",";
            csv_number(os, rows[i].error_frobenius);
            os << "," << (rows[i].is_record ? 1 : 0);
            if (o.validate) {
                os << ",";
                if (deviation[i]) {
                    csv_number(os, *deviation[i]);
                }
            }
            os << "\n";
        }
    }
    return ok ? kExitOk : kExitVerificationFailure;
}

json report_json(const ScatterRunReport &r, bool with_samples) {
    json doc = {{"arm", r.packet.arm + 1},
                {"k", r.packet.momentum.str()},
                {"sigma", r.packet.width},
                {"x0", r.packet.center},
                {"L", r.length},
                {"time", r.time},
                {"arm_probability", r.arm_probability},
                {"predicted", r.predicted},
                {"inner_probability", r.inner_probability},
                {"norm_drift", r.norm_drift},
                {"energy_drift", r.energy_drift},
                {"max_edge_probability", r.max_edge_probability},
                {"valid", r.valid()}};
    if (with_samples) {
        json samples = json::array();
        for (const RunSample &s : r.samples) {
            samples.push_back({{"t", s.t},
                               {"arm_probability", s.arm_probability},
                               {"inner_probability", s.inner_probability},
                               {"norm", s.norm}});
        }
        doc["samples"] = samples;
    }
    return doc;
}

int cmd_simulate(const Options &o, std::ostream &os, bool format_given) {
    const std::string format = format_given ? o.format : "csv";
    if (format != "csv" && format != "json") {
        throw InputError("format '" + format + "' is not supported by this subcommand");
    }
    const Gadget g = resolve_gadget(o.gadget);
    const auto ks = parse_momenta(o.k);
    if (ks.size() != 1) {
        throw InputError("simulate needs exactly one --k");
    }
    if (!(o.sigma > 0)) {
        throw InputError("--sigma must be positive");
    }
    if (o.arm < 0 || o.arm >= g.terminal_count()) {
        throw InputError("--arm out of range");
    }
    WavePacket p;
    p.arm = o.arm;
    p.width = o.sigma;
    p.momentum = ks[0];
    const int length = o.length ? *o.length : static_cast<int>(std::lround(20 * o.sigma));
    p.center = o.center ? *o.center : length / 2.0;
    ScatterRunReport r = scatter_experiment(g, p, length, o.time, o.samples);

    if (!o.sidecar.empty()) {
        std::ofstream side(o.sidecar, std::ios::binary);
        if (!side) {
            throw InputError("cannot write '" + o.sidecar + "'");
        }
        side << report_json(r, false).dump(2) << "\n";
    }
    if (format == "json") {
        os << report_json(r, true).dump(2) << "\n";
    } else {
        os << "t";
        for (int j = 0; j < g.terminal_count(); j++) {
            os << ",arm" << j + 1;
        }
        os << ",inner,norm\n";
        for (const RunSample &s : r.samples) {
            csv_number(os, s.t);
            for (double a : s.arm_probability) {
                os << ",";
                csv_number(os, a);
            }
            os << ",";
            csv_number(os, s.inner_probability);
            os << ",";
            csv_number(os, s.norm);
            os << "\n";
        }
    }
    return r.valid() ? kExitOk : kExitVerificationFailure;
}

int cmd_catalog(const Options &o, std::ostream &os) {
    require_format(o, {"json", "csv"});
    if (o.format == "csv") {
        os << "name,terminals,description\n";
        for (const CatalogEntry &e : catalog()) {
            os << e.name << "," << e.terminals << ",\"" << e.description << "\"\n";
        }
        return kExitOk;
    }
    json entries = json::array();
    for (const CatalogEntry &e : catalog()) {
        entries.push_back({{"name", e.name}, {"terminals", e.terminals}, {"description", e.description}});
    }
    os << entries.dump(2) << "\n";
    return kExitOk;
}

void error_line(std::ostream &err, const char *kind, const std::string &message) {
    err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Scattering, gadget construction and verification for continuous-time quantum walks", "qwalk"};
    app.require_subcommand(1);

    auto gadget = [&](CLI::App *s, const char *help) { s->add_option("--gadget", o.gadget, help); };
    auto common = [&](CLI::App *s) {
        s->add_option("--format", o.format, "json or csv");
        s->add_option("--out", o.out, "write the result here instead of stdout");
    };
    auto momenta = [&](CLI::App *s) {
        s->add_option("--k", o.k, "momentum p/q meaning -pi p/q (repeatable)")->expected(1, CLI::detail::expected_max_vector_size)->take_all();
    };
    CLI::Option *tol_opt = nullptr;
    auto tolerance = [&](CLI::App *s) { tol_opt = s->add_option("--tol", o.tol, "tolerance (> 0)"); };
    auto positive_tol = [&]() {
        if (!(o.tol > 0)) {
            throw InputError("--tol must be positive");
        }
    };

    CLI::App *build = app.add_subcommand("build", "canonical gadget document for a builtin, a file or a random type-1 spec");
    gadget(build, "gadget file or builtin name");
    common(build);
    build->add_option("--random", o.random_n, "random connected G0 with this many vertices");
    build->add_option("--p", o.random_p, "extra-edge probability for --random");
    build->add_option("--seed", o.seed, "seed for --random");
    build->add_flag("--type2", o.type2, "single attachment vertex");
    build->add_option("--sidecar", o.sidecar, "write the predicted R/T sets of a path or cycle family here");
    build->add_flag("--spec", o.spec_only, "emit G0 with S as terminals instead of the built gadget");

    CLI::App *smatrix = app.add_subcommand("smatrix", "S-matrix at each momentum");
    gadget(smatrix, "gadget file or builtin name");
    common(smatrix);
    momenta(smatrix);

    CLI::App *classify = app.add_subcommand("classify", "perfect reflection / transmission sets of a two-terminal gadget");
    gadget(classify, "gadget file or builtin name");
    common(classify);
    momenta(classify);
    tolerance(classify);
    classify->add_option("--grid", o.grid, "add every -pi j/q, j = 1..q-1");

    CLI::App *check = app.add_subcommand("check-switch", "momentum switch test; exit 2 when it fails");
    gadget(check, "gadget file or builtin name");
    common(check);
    tolerance(check);
    check->add_option("--D", o.d, "momenta routed 1 -> 2")->take_all();
    check->add_option("--Dp", o.dp, "momenta routed 1 -> 3")->take_all();

    CLI::App *rev = app.add_subcommand("reversal", "reversal gadget of a type-2 spec");
    gadget(rev, "spec file (G0, terminals = S) or path:<l1>:<l2> / cycle:<r>");
    common(rev);

    CLI::App *swf = app.add_subcommand("switch-from", "momentum switch built from a type-2 spec");
    gadget(swf, "spec file (G0, terminals = S) or path:<l1>:<l2> / cycle:<r>");
    common(swf);
    momenta(swf);
    swf->add_flag("--witness", o.witness, "check the explicit eigenstate at each --k");

    CLI::App *exact = app.add_subcommand("exact-check", "exact Q(sqrt2) reflection check at -pi/4 and -3pi/4");
    gadget(exact, "two-terminal gadget file or builtin name");
    common(exact);
    exact->add_flag("--witness", o.witness, "include the exact witness vectors");

    CLI::App *approx = app.add_subcommand("approx-search", "switch error of the approximate switch for odd m");
    CLI::Option *approx_format = approx->add_option("--format", o.format, "csv (default) or json");
    approx->add_option("--out", o.out, "write the result here instead of stdout");
    tolerance(approx);
    CLI::Option *approx_tol = tol_opt;
    approx->add_option("--max-m", o.max_m, "largest m scanned");
    approx->add_flag("--validate", o.validate, "cross-check small m against the graph S-matrix");

    CLI::App *sim = app.add_subcommand("simulate", "Gaussian wave packet through a gadget");
    gadget(sim, "gadget file or builtin name");
    CLI::Option *format_opt = sim->add_option("--format", o.format, "csv (time series, default) or json");
    sim->add_option("--out", o.out, "write the result here instead of stdout");
    momenta(sim);
    sim->add_option("--sigma", o.sigma, "packet width (default 10)");
    sim->add_option("--L", o.length, "arm length (default 20 sigma)");
    sim->add_option("--arm", o.arm, "starting arm, 1-based")->transform([](std::string v) {
        try {
            return std::to_string(std::stoi(v) - 1);
        } catch (const std::exception &) {
            return v;
        }
    });
    sim->add_option("--x0", o.center, "packet centre (default L/2)");
    sim->add_option("--time", o.time, "evolution time (default covers the traversal)");
    sim->add_option("--samples", o.samples, "number of snapshots");
    sim->add_option("--sidecar", o.sidecar, "also write the JSON report here");

    CLI::App *cat = app.add_subcommand("catalog", "builtin gadgets and families");
    common(cat);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        error_line(err, "usage", e.what());
        return kExitInputError;
    }

    std::ostringstream buf;
    int code = kExitOk;
    try {
        positive_tol();
        if (*build) {
            code = cmd_build(o, buf);
        } else if (*smatrix) {
            code = cmd_smatrix(o, buf);
        } else if (*classify) {
            code = cmd_classify(o, buf);
        } else if (*check) {
            code = cmd_check_switch(o, buf);
        } else if (*rev) {
            code = cmd_reversal(o, buf);
        } else if (*swf) {
            code = cmd_switch_from(o, buf);
        } else if (*exact) {
            code = cmd_exact_check(o, buf);
        } else if (*approx) {
            code = cmd_approx_search(o, buf, approx_tol->count() > 0, approx_format->count() > 0);
        } else if (*sim) {
            code = cmd_simulate(o, buf, format_opt->count() > 0);
        } else if (*cat) {
            code = cmd_catalog(o, buf);
        }
    } catch (const FalsificationAlarm &e) {
        error_line(err, "falsification", e.what());
        return kExitVerificationFailure;
    } catch (const ScatterError &e) {
        error_line(err, "solver", e.what());
        return kExitVerificationFailure;
    } catch (const InputError &e) {
        error_line(err, "input", e.what());
        return kExitInputError;
    } catch (const std::invalid_argument &e) {
        error_line(err, "input", e.what());
        return kExitInputError;
    } catch (const std::exception &e) {
        error_line(err, "internal", e.what());
        return kExitVerificationFailure;
    }

    if (o.out.empty()) {
        out << buf.str();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file || !(file << buf.str())) {
            error_line(err, "input", "cannot write '" + o.out + "'");
            return kExitInputError;
        }
    }
    return code;
}

}  // namespace qwalk::cli
