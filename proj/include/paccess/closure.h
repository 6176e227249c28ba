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

#ifndef PACCESS_CLOSURE_H
#define PACCESS_CLOSURE_H

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "paccess/pauli_string.h"

namespace paccess {

/// How a member entered the set. Seeds have neither field.
struct Provenance {
    std::optional<std::size_t> parent;
    std::optional<PauliString> edge;

    bool is_seed() const { return !parent.has_value(); }
};

/// Contiguous run [begin, end) of members whose highest non-identity site is k (1-based).
struct PartitionBlock {
    std::size_t k = 0;
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct AccessibleSet {
    std::size_t num_qubits = 0;
    std::vector<PauliString> members;
    std::vector<Provenance> provenance;
    /// Filled once the set has been ordered; empty right after generation.
    std::vector<PartitionBlock> partition;
    /// Member index of each partition block's core operator.
    std::vector<std::size_t> cores;

    std::size_t size() const { return members.size(); }
    std::unordered_map<PauliString, std::size_t, PauliStringHash> index() const;
    /// Members sorted canonically, for order-insensitive comparison.
    std::vector<PauliString> sorted_members() const;
};

struct GenerateOptions {
    unsigned threads = 1;
};

/// Breadth-first bracket closure of `seeds` under `digamma`.
///
/// Each frontier member is bracketed against every digamma string in canonical
/// order; new strings are appended in (frontier order x digamma order), so the
/// member order does not depend on `options.threads`.
AccessibleSet generate(std::span<const PauliString> digamma, std::span<const PauliString> seeds,
                       GenerateOptions options = {});

inline constexpr std::size_t kReferenceQubitCap = 4;

/// Reference closure that scans all 4^n candidate strings and keeps those with
/// nonzero trace overlap Tr(O^dagger [tau, nu]), using dense Kronecker matrices.
/// Slow by construction; exists to validate `generate`.
AccessibleSet generate_reference(std::span<const PauliString> digamma, std::span<const PauliString> seeds,
                                 std::size_t qubit_cap = kReferenceQubitCap);

enum class ChainAxis { X, Y };

/// Closed-form accessible set of Z^(m-1) X_m (axis X) or Z^(m-1) Y_m (axis Y) under
/// the exchange chain: one member Z^(j-1) P_j per site j = 1..n, where P_j is the
/// seed's axis when |j - m| is even and the other axis when it is odd. Members run
/// j = m..n first, then j = m-1 down to 1: the closure also reaches left of the seed.
/// `m` is 1-based.
AccessibleSet chain_closed_form(std::size_t num_qubits, std::size_t m, ChainAxis axis);

}  // namespace paccess

#endif
