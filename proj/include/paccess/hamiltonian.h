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

#ifndef PACCESS_HAMILTONIAN_H
#define PACCESS_HAMILTONIAN_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paccess/pauli_sum.h"

namespace paccess {

struct HamiltonianTerm {
    double coefficient = 0;
    PauliString string;
    std::string label;
};

/// H = sum_k h_k H_k with each H_k a Pauli string. Terms are kept as given:
/// duplicates and zero couplings survive, since the accessible set depends only
/// on which strings appear.
struct HamiltonianSpec {
    std::size_t num_qubits = 0;
    std::vector<HamiltonianTerm> terms;

    /// Merged numeric operator (duplicates summed, zeros dropped).
    WeightedPauliSum sum() const;
    std::string str() const;
};

/// Raw measurement operators together with their decomposed Pauli support.
struct MeasurementSpec {
    std::size_t num_qubits = 0;
    std::vector<WeightedPauliSum> operators;
    /// Union of the operators' strings, deduplicated, in first-appearance order.
    std::vector<PauliString> decomposed;

    static MeasurementSpec from_operators(std::size_t num_qubits, std::vector<WeightedPauliSum> operators);
    static MeasurementSpec parse(std::span<const std::string> texts, std::size_t num_qubits);
};

HamiltonianSpec parse_hamiltonian(std::string_view text, std::size_t num_qubits);

/// sum_k h_k (X_k X_{k+1} + Y_k Y_{k+1}) on an open chain.
HamiltonianSpec build_exchange_chain(std::size_t num_qubits, std::span<const double> couplings);

/// Deduplicated non-identity strings of the Hamiltonian, in canonical order.
std::vector<PauliString> decomposed_digamma(const HamiltonianSpec &spec);

/// The six single-operator measurement schemes studied on the exchange chain:
/// 'a' X1, 'b' Z1, 'c' Z1 Y2, 'd' Y1 Z2, 'e' Z1 Z2 X3, 'f' X1 Y2 Z3.
inline constexpr std::string_view kChainCases = "abcdef";

/// Number of leading sites the case's operator touches.
std::size_t chain_case_span(char case_id);

/// The case's operator on `num_qubits` sites, with sites beyond the chain dropped.
PauliString chain_case_seed(char case_id, std::size_t num_qubits);

}  // namespace paccess

#endif
