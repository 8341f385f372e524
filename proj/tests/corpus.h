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

#ifndef QWALK_TESTS_CORPUS_H
#define QWALK_TESTS_CORPUS_H

#include <optional>
#include <string>
#include <vector>

#include "qwalk/constructions.h"

namespace qwalk::testing {

struct CorpusEntry {
    std::string name;
    Gadget gadget;
    /// Set for type-1 instances.
    std::optional<Type1Spec> spec;
    /// Natural momentum grid (family denominators, or q = 12 for random specs).
    std::vector<Momentum> grid;
};

/// Paths with l1 + l2 <= 10, cycles 3..9, seeded random type-1 and type-2
/// specs, the single edge and the two-edge path. Every gadget has <= 12 vertices.
std::vector<CorpusEntry> two_terminal_corpus();

/// The type-2 members of two_terminal_corpus().
std::vector<CorpusEntry> type2_corpus();

/// Multi-terminal builtins plus the two-terminal corpus.
std::vector<CorpusEntry> scattering_corpus();

}  // namespace qwalk::testing

#endif
