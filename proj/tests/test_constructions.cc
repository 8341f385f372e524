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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "corpus.h"
#include "qwalk/constructions.h"
#include "qwalk/scatter.h"

namespace qwalk {
namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

bool contains(const std::vector<Momentum> &set, const Momentum &k) {
    return std::find(set.begin(), set.end(), k) != set.end();
}

std::vector<Momentum> sorted(std::vector<Momentum> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Momentum> ms(std::initializer_list<std::pair<int, int>> fracs) {
    std::vector<Momentum> out;
    for (auto [p, q] : fracs) {
        out.push_back(Momentum::rational(p, q));
    }
    return sorted(out);
}

Type1Spec spec_of(int n, std::vector<std::pair<int, int>> edges, std::vector<int> attach) {
    return Type1Spec{Graph(n, std::move(edges)), std::move(attach)};
}

TEST(BuildType1, ThreePathAtMiddleIsPathFamily) {
    Gadget g = build_type1(spec_of(3, {{0, 1}, {1, 2}}, {1}));
    EXPECT_TRUE(isomorphic(g, path_gadget(2, 2).gadget));
}

TEST(BuildType1, FourCycleIsCycleFamily) {
    Gadget g = build_type1(spec_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0}));
    EXPECT_TRUE(isomorphic(g, cycle_gadget(4).gadget));
}

TEST(BuildType1, SingleVertexReflectsOnlyAtZeroEnergy) {
    Gadget g = build_type1(spec_of(1, {}, {0}));
    EXPECT_EQ(g.vertex_count(), 4);
    RTClassification c = classify_rt(g, momentum_grid(12));
    EXPECT_EQ(c.reflect_set, ms({{1, 2}}));
}

TEST(BuildType1, Layout) {
    Type1Spec spec = spec_of(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 3});
    Gadget g = build_type1(spec);
    EXPECT_EQ(g.terminals(), (std::vector<int>{5, 6}));
    EXPECT_TRUE(g.graph().has_edge(4, 0));
    EXPECT_TRUE(g.graph().has_edge(4, 3));
    EXPECT_TRUE(g.graph().has_edge(4, 5));
    EXPECT_TRUE(g.graph().has_edge(4, 6));
    EXPECT_EQ(spec.inner_vertices(), (std::vector<int>{1, 2}));
    Type1Spec back = spec_from_gadget(spec_to_gadget(spec));
    EXPECT_EQ(back.g0, spec.g0);
    EXPECT_EQ(back.attach, spec.attach);
}

TEST(BuildType1, RejectsBadAttachment) {
    EXPECT_THROW(build_type1(spec_of(2, {{0, 1}}, {})), std::invalid_argument);
    EXPECT_THROW(build_type1(spec_of(2, {{0, 1}}, {2})), std::invalid_argument);
    EXPECT_THROW(build_type1(spec_of(2, {{0, 1}}, {1, 1})), std::invalid_argument);
}

TEST(Lemma1, Examples) {
    Type1Spec c4 = cycle_gadget(4).spec;
    auto cert = lemma1_predict(c4, Momentum::rational(1, 2));
    ASSERT_TRUE(cert.has_value());
    EXPECT_EQ(cert->kind, EigenCertificate::Kind::reflect);
    EXPECT_GT(std::abs(cert->constant_c), 1e-9);
    EXPECT_LT(cert->eigen_residual, 1e-10);
    EXPECT_FALSE(lemma1_predict(c4, Momentum::rational(1, 4)).has_value());
    EXPECT_TRUE(lemma1_predict(path_gadget(2, 2).spec, Momentum::rational(1, 4)).has_value());
}

TEST(Lemma2, Examples) {
    Type1Spec c4 = cycle_gadget(4).spec;
    auto cert = lemma2_predict(c4, Momentum::rational(1, 4));
    ASSERT_TRUE(cert.has_value());
    EXPECT_EQ(cert->kind, EigenCertificate::Kind::transmit);
    EXPECT_EQ(cert->support.size(), 3u);
    EXPECT_GT(std::abs(cert->constant_c), 1e-9);
    EXPECT_LT(cert->eigen_residual, 1e-10);
    EXPECT_TRUE(lemma2_predict(path_gadget(2, 2).spec, Momentum::rational(1, 2)).has_value());
    EXPECT_FALSE(lemma2_predict(c4, Momentum::rational(1, 2)).has_value());
    EXPECT_TRUE(classify_rt(cycle_gadget(4).gadget, ms({{1, 2}})).transmit_set.empty());
}

TEST(Families, PathPredictions) {
    FamilyGadget p22 = path_gadget(2, 2);
    EXPECT_EQ(sorted(p22.predicted_transmit), ms({{1, 2}}));
    EXPECT_EQ(sorted(p22.predicted_reflect), ms({{1, 4}, {3, 4}}));
    FamilyGadget p23 = path_gadget(2, 3);
    EXPECT_EQ(sorted(p23.predicted_transmit), ms({{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(sorted(p23.predicted_reflect), ms({{1, 5}, {2, 5}, {3, 5}, {4, 5}}));
    FamilyGadget p33 = path_gadget(3, 3);
    EXPECT_EQ(sorted(p33.predicted_transmit), ms({{1, 3}, {2, 3}}));
    EXPECT_EQ(sorted(p33.predicted_reflect), ms({{1, 6}, {1, 2}, {5, 6}}));
    EXPECT_THROW(path_gadget(1, 3), std::invalid_argument);
}

TEST(Families, CyclePredictions) {
    FamilyGadget c4 = cycle_gadget(4);
    EXPECT_EQ(sorted(c4.predicted_transmit), ms({{1, 4}, {3, 4}}));
    EXPECT_EQ(sorted(c4.predicted_reflect), ms({{1, 2}}));
    FamilyGadget c3 = cycle_gadget(3);
    EXPECT_EQ(sorted(c3.predicted_transmit), ms({{1, 3}}));
    EXPECT_EQ(sorted(c3.predicted_reflect), ms({{2, 3}}));
    FamilyGadget c6 = cycle_gadget(6);
    EXPECT_EQ(sorted(c6.predicted_transmit), ms({{1, 6}, {1, 2}, {5, 6}}));
    EXPECT_EQ(sorted(c6.predicted_reflect), ms({{1, 3}, {2, 3}}));
    EXPECT_THROW(cycle_gadget(2), std::invalid_argument);
}

TEST(Families, MeasuredSetsMatchPredictions) {
    for (int l1 = 2; l1 <= 8; l1++) {
        for (int l2 = 2; l2 <= 8; l2++) {
            FamilyGadget f = path_gadget(l1, l2);
            RTClassification c = classify_rt(f.gadget, f.natural_grid);
            EXPECT_EQ(sorted(c.reflect_set), sorted(f.predicted_reflect)) << l1 << "," << l2;
            EXPECT_EQ(sorted(c.transmit_set), sorted(f.predicted_transmit)) << l1 << "," << l2;
        }
    }
    for (int r = 3; r <= 12; r++) {
        FamilyGadget f = cycle_gadget(r);
        RTClassification c = classify_rt(f.gadget, f.natural_grid);
        EXPECT_EQ(sorted(c.reflect_set), sorted(f.predicted_reflect)) << r;
        EXPECT_EQ(sorted(c.transmit_set), sorted(f.predicted_transmit)) << r;
    }
}

TEST(Lemmas, SoundOverCorpus) {
    for (const auto &entry : testing::two_terminal_corpus()) {
        if (!entry.spec) {
            continue;
        }
        RTClassification c = classify_rt(entry.gadget, entry.grid);
        for (const Momentum &k : entry.grid) {
            const bool r = contains(c.reflect_set, k);
            const bool t = contains(c.transmit_set, k);
            EXPECT_EQ(lemma1_predict(*entry.spec, k).has_value(), r) << entry.name << " " << k.str();
            const bool cert = lemma2_predict(*entry.spec, k).has_value();
            if (cert) {
                EXPECT_TRUE(t) << entry.name << " " << k.str();
            }
            if (entry.spec->is_type2()) {
                EXPECT_EQ(cert, t) << entry.name << " " << k.str();
            }
        }
    }
}

TEST(RandomSpec, DeterministicConnectedAndValid) {
    for (uint64_t seed = 1; seed <= 40; seed++) {
        const bool type2 = seed % 2 == 0;
        Type1Spec a = random_type1_spec(7, 0.3, seed, type2);
        Type1Spec b = random_type1_spec(7, 0.3, seed, type2);
        EXPECT_EQ(a.g0, b.g0);
        EXPECT_EQ(a.attach, b.attach);
        EXPECT_NO_THROW(a.validate());
        EXPECT_EQ(a.g0.vertex_count(), 7);
        EXPECT_GE(a.g0.edge_count(), 6);
        EXPECT_NE(a.g0.diameter(), -1);
        EXPECT_EQ(a.is_type2(), type2 || a.attach.size() == 1);
    }
    EXPECT_THROW(random_type1_spec(0, 0.3, 1, false), std::invalid_argument);
    EXPECT_THROW(random_type1_spec(3, 1.5, 1, false), std::invalid_argument);
}

TEST(Reversal, CycleExamples) {
    RTClassification c3 = classify_rt(reversal(cycle_gadget(3).spec), momentum_grid(3));
    EXPECT_TRUE(contains(c3.transmit_set, Momentum::rational(2, 3)));
    EXPECT_TRUE(contains(c3.reflect_set, Momentum::rational(1, 3)));
    RTClassification c4 = classify_rt(reversal(cycle_gadget(4).spec), momentum_grid(4));
    EXPECT_TRUE(contains(c4.transmit_set, Momentum::rational(1, 2)));
    EXPECT_TRUE(contains(c4.reflect_set, Momentum::rational(1, 4)));
    EXPECT_TRUE(contains(c4.reflect_set, Momentum::rational(3, 4)));
}

// Two copies of g0, the shared hub, the connector and two terminals.
TEST(Reversal, StructureForSingleVertexInnerGraph) {
    Type1Spec spec = spec_of(2, {{0, 1}}, {0});
    Gadget g = reversal(spec);
    EXPECT_EQ(g.vertex_count(), 2 * 1 + 2 + 2);
    EXPECT_EQ(g.terminal_count(), 2);
    Type1Spec not2 = spec_of(3, {{0, 1}, {1, 2}}, {0, 2});
    EXPECT_THROW(reversal(not2), std::invalid_argument);
    EXPECT_THROW(switch_from_type2(not2), std::invalid_argument);
}

TEST(Reversal, ContainmentsOverTypeTwoCorpus) {
    auto corpus = testing::type2_corpus();
    ASSERT_GE(corpus.size(), 15u);
    for (const auto &entry : corpus) {
        RTClassification before = classify_rt(entry.gadget, entry.grid);
        RTClassification after = classify_rt(reversal(*entry.spec), entry.grid);
        for (const Momentum &k : before.reflect_set) {
            EXPECT_TRUE(contains(after.transmit_set, k)) << entry.name << " " << k.str();
        }
        for (const Momentum &k : before.transmit_set) {
            EXPECT_TRUE(contains(after.reflect_set, k)) << entry.name << " " << k.str();
        }
    }
}

TEST(SwitchFromTypeTwo, ThreeCycle) {
    Gadget sw = switch_from_type2(cycle_gadget(3).spec);
    EXPECT_TRUE(isomorphic(sw, named_gadget("cycle3_switch")));
    std::vector<Momentum> d = ms({{1, 3}}), dp = ms({{2, 3}});
    EXPECT_TRUE(is_momentum_switch(sw, d, dp).is_switch);
    for (int j = 1; j <= 3; j++) {
        EXPECT_TRUE(sw.graph().has_edge(0, sw.terminals()[j - 1]));
    }
}

TEST(SwitchFromTypeTwo, FiveCycleSplitsOddAndEven) {
    FamilyGadget c5 = cycle_gadget(5);
    EXPECT_EQ(sorted(c5.predicted_transmit), ms({{1, 5}, {3, 5}}));
    EXPECT_EQ(sorted(c5.predicted_reflect), ms({{2, 5}, {4, 5}}));
    Gadget sw = switch_from_type2(c5.spec);
    EXPECT_TRUE(is_momentum_switch(sw, c5.predicted_transmit, c5.predicted_reflect).is_switch);
}

TEST(SwitchFromTypeTwo, FivePathAtCentreUsesItsOwnSets) {
    FamilyGadget p = path_gadget(3, 3);
    Gadget sw = switch_from_type2(p.spec);
    EXPECT_TRUE(is_momentum_switch(sw, p.predicted_transmit, p.predicted_reflect).is_switch);
    EXPECT_FALSE(is_momentum_switch(sw, p.predicted_reflect, p.predicted_transmit).is_switch);
}

TEST(SwitchFromTypeTwo, WitnessStatesOverTypeTwoCorpus) {
    int checked = 0;
    for (const auto &entry : testing::type2_corpus()) {
        Gadget sw = switch_from_type2(*entry.spec);
        RTClassification c = classify_rt(entry.gadget, entry.grid);
        for (const Momentum &k : entry.grid) {
            auto w = switch_witness_state(*entry.spec, k);
            const bool in_t = contains(c.transmit_set, k), in_r = contains(c.reflect_set, k);
            ASSERT_EQ(w.has_value(), in_t || in_r) << entry.name << " " << k.str();
            if (!w) {
                continue;
            }
            EXPECT_LT(eigen_residual(sw, k, w->amplitudes, w->incoming, w->outgoing), 1e-10) << entry.name;
            EXPECT_NEAR(std::abs(w->incoming(0)), 1.0, 1e-12);
            const int out = in_t ? 1 : 2, silent = in_t ? 2 : 1;
            EXPECT_NEAR(std::abs(w->outgoing(out)), 1.0, 1e-9) << entry.name;
            EXPECT_LT(std::abs(w->outgoing(silent)), 1e-9) << entry.name;
            EXPECT_LT(std::abs(w->outgoing(0)), 1e-9) << entry.name;
            checked++;
        }
    }
    EXPECT_GT(checked, 20);
}

TEST(NamedGadget, ThirteenVertexSwitch) {
    Gadget g = named_gadget("cgw13_switch");
    EXPECT_EQ(g.vertex_count(), 13);
    EXPECT_EQ(g.graph().edge_count(), 13);
    EXPECT_EQ(g.terminal_count(), 3);
}

TEST(NamedGadget, PhaseGadgetTransmission) {
    Gadget g = named_gadget("phase_gadget");
    EXPECT_EQ(g.vertex_count(), 8);
    EXPECT_EQ(g.terminal_count(), 2);
    const cplx e(2 * sqrt2 / 3, 1.0 / 3);
    EXPECT_LT(std::abs(phase_factor() - e), 1e-15);
    EXPECT_LT(std::abs(s_matrix(g, Momentum::rational(1, 4)).entries(1, 0) + e), 1e-9);
    EXPECT_LT(std::abs(s_matrix(g, Momentum::rational(3, 4)).entries(1, 0) - e), 1e-9);
    EXPECT_TRUE(phase_gadget_gate(g));
    EXPECT_FALSE(phase_gadget_gate(named_gadget("two_edge_path")));
}

TEST(NamedGadget, PhaseGadgetReadings) {
    auto readings = phase_gadget_readings();
    ASSERT_GE(readings.size(), 2u);
    EXPECT_TRUE(phase_gadget_gate(readings[0]));
    EXPECT_EQ(phase_gadget().graph(), readings[0].graph());
    for (size_t i = 1; i < readings.size(); i++) {
        EXPECT_FALSE(phase_gadget_gate(readings[i])) << i;
    }
}

TEST(NamedGadget, ApproximateSwitchShape) {
    Gadget g1 = named_gadget("approx_switch:1");
    EXPECT_EQ(g1.terminal_count(), 4);
    EXPECT_EQ(g1.vertex_count(), 27);
    Gadget g3 = approx_switch(3);
    // Each extra phase gadget shares one vertex with its neighbour.
    EXPECT_EQ(g3.vertex_count(), 27 + 2 * 7);
    EXPECT_THROW(approx_switch(2), std::invalid_argument);
    EXPECT_THROW(named_gadget("approx_switch:4"), std::invalid_argument);
}

TEST(NamedGadget, ParsingErrors) {
    EXPECT_THROW(named_gadget("nope"), std::invalid_argument);
    EXPECT_THROW(named_gadget("path:2"), std::invalid_argument);
    EXPECT_THROW(named_gadget("cycle:x"), std::invalid_argument);
    EXPECT_THROW(named_gadget("edge:1"), std::invalid_argument);
    EXPECT_TRUE(isomorphic(named_gadget("path:2:3"), path_gadget(2, 3).gadget));
    EXPECT_TRUE(isomorphic(named_gadget("cycle:5"), cycle_gadget(5).gadget));
}

TEST(Catalog, ListsBuiltinsAndFamilies) {
    auto cat = catalog();
    auto has = [&](const std::string &name) {
        return std::any_of(cat.begin(), cat.end(), [&](const CatalogEntry &e) { return e.name == name; });
    };
    EXPECT_TRUE(has("cgw13_switch"));
    EXPECT_TRUE(has("phase_gadget"));
    EXPECT_TRUE(has("basis_change"));
    EXPECT_TRUE(has("path:<l1>:<l2>"));
    EXPECT_TRUE(has("cycle:<r>"));
    for (const auto &e : cat) {
        EXPECT_FALSE(e.description.empty());
        if (e.name.find('<') == std::string::npos) {
            EXPECT_EQ(named_gadget(e.name).terminal_count(), e.terminals) << e.name;
        }
    }
}

}  // namespace
}  // namespace qwalk
