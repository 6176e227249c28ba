// Copyright 2026 The paccess Authors
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

#ifndef PACCESS_VERIFY_H
#define PACCESS_VERIFY_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paccess/closure.h"
#include "paccess/hamiltonian.h"

namespace paccess {

/// Applies bracket_normalized with each edge in turn; empty if a step commutes.
std::optional<PauliString> walk_edges(const PauliString &start, std::span<const PauliString> edges);

/// generate() on the exchange chain with unit couplings and one seed.
AccessibleSet chain_set(std::size_t num_qubits, const PauliString &seed, unsigned threads = 1);

struct SizeRange {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

/// "a..b" or a single integer.
SizeRange parse_size_range(std::string_view text);

struct SuiteReport {
    std::string name;
    std::vector<std::string> lines;
    std::size_t failures = 0;

    bool pass() const { return failures == 0; }
};

/// Suite names accepted by run_suite.
std::vector<std::string> suite_names();

/// Runs one verification suite over chain sizes in `range`. `seed` drives the
/// randomized suites (trajectory couplings and states, appendix instances).
SuiteReport run_suite(std::string_view name, SizeRange range, unsigned threads = 1, std::uint64_t seed = 1);

}  // namespace paccess

#endif
