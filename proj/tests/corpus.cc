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

#include "corpus.h"

namespace qwalk::testing {

namespace {

constexpr uint64_t kCorpusSeed = 20260417;

}  // namespace

std::vector<CorpusEntry> two_terminal_corpus() {
    std::vector<CorpusEntry> out;
    for (int l1 = 2; l1 <= 8; l1++) {
        for (int l2 = 2; l1 + l2 <= 10; l2++) {
            FamilyGadget f = path_gadget(l1, l2);
            out.push_back({"path:" + std::to_string(l1) + ":" + std::to_string(l2), f.gadget, f.spec, f.natural_grid});
        }
    }
    for (int r = 3; r <= 9; r++) {
        FamilyGadget f = cycle_gadget(r);
        out.push_back({"cycle:" + std::to_string(r), f.gadget, f.spec, f.natural_grid});
    }
    for (int i = 0; i < 20; i++) {
        const bool type2 = i % 2 == 1;
        const int n = 3 + i % 6;
        Type1Spec spec = random_type1_spec(n, 0.35, kCorpusSeed + i, type2);
        out.push_back({std::string(type2 ? "random2:" : "random1:") + std::to_string(i), build_type1(spec), spec,
                       momentum_grid(12)});
    }
    out.push_back({"edge", named_gadget("edge"), std::nullopt, momentum_grid(12)});
    out.push_back({"two_edge_path", named_gadget("two_edge_path"), std::nullopt, momentum_grid(12)});
    return out;
}

std::vector<CorpusEntry> type2_corpus() {
    std::vector<CorpusEntry> out;
    for (CorpusEntry &e : two_terminal_corpus()) {
        if (e.spec && e.spec->is_type2()) {
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<CorpusEntry> scattering_corpus() {
    std::vector<CorpusEntry> out;
    for (const char *name : {"claw", "cgw13_switch", "cycle3_switch", "basis_change", "phase_gadget"}) {
        out.push_back({name, named_gadget(name), std::nullopt, {}});
    }
    for (CorpusEntry &e : two_terminal_corpus()) {
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace qwalk::testing
