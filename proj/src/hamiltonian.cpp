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

#include "paccess/hamiltonian.h"

#include <algorithm>
#include <unordered_set>

#include "paccess/errors.h"

namespace paccess {

WeightedPauliSum HamiltonianSpec::sum() const {
    WeightedPauliSum out(num_qubits);
    for (const auto &t : terms) {
        out.add(t.coefficient, t.string);
    }
    return out;
}

std::string HamiltonianSpec::str() const {
    std::vector<PauliTerm> raw;
    raw.reserve(terms.size());
    for (const auto &t : terms) {
        raw.push_back({t.coefficient, t.string});
    }
    return format_terms(raw);
}

MeasurementSpec MeasurementSpec::from_operators(std::size_t num_qubits, std::vector<WeightedPauliSum> operators) {
    MeasurementSpec spec;
    spec.num_qubits = num_qubits;
    std::unordered_set<PauliString, PauliStringHash> seen;
    for (auto &op : operators) {
        if (op.num_qubits() != num_qubits) {
            throw DimensionError("measurement operator width does not match the system");
        }
        if (op.empty()) {
            throw InputError("measurement operator is zero");
        }
        op = decompose(op);
        if (op.empty()) {
            throw InputError("measurement operator is numerically zero");
        }
        for (const auto &t : op.terms()) {
            if (t.string.is_identity()) {
                throw InputError("measurement has an identity component, which y = Cx cannot carry");
            }
            if (seen.insert(t.string).second) {
                spec.decomposed.push_back(t.string);
            }
        }
    }
    spec.operators = std::move(operators);
    return spec;
}

MeasurementSpec MeasurementSpec::parse(std::span<const std::string> texts, std::size_t num_qubits) {
    std::vector<WeightedPauliSum> ops;
    for (const auto &text : texts) {
        ops.push_back(WeightedPauliSum::parse(text, num_qubits));
    }
    return from_operators(num_qubits, std::move(ops));
}

HamiltonianSpec parse_hamiltonian(std::string_view text, std::size_t num_qubits) {
    HamiltonianSpec spec;
    spec.num_qubits = num_qubits;
    for (auto &t : parse_terms(text, num_qubits)) {
        spec.terms.push_back({t.coefficient, std::move(t.string), {}});
    }
    return spec;
}

HamiltonianSpec build_exchange_chain(std::size_t num_qubits, std::span<const double> couplings) {
    if (num_qubits < 2) {
        throw InputError("an exchange chain needs at least two qubits");
    }
    if (couplings.size() != num_qubits - 1) {
        throw InputError(
            "expected " + std::to_string(num_qubits - 1) + " couplings, got " + std::to_string(couplings.size()));
    }
    HamiltonianSpec spec;
    spec.num_qubits = num_qubits;
    for (std::size_t k = 0; k + 1 < num_qubits; ++k) {
        for (Cell c : {Cell::X, Cell::Y}) {
            PauliString p(num_qubits);
            p.set(k, c);
            p.set(k + 1, c);
            std::string label = "h" + std::to_string(k + 1) + " " + cell_char(c) + cell_char(c);
            spec.terms.push_back({couplings[k], std::move(p), std::move(label)});
        }
    }
    return spec;
}

std::vector<PauliString> decomposed_digamma(const HamiltonianSpec &spec) {
    std::vector<PauliString> out;
    for (const auto &t : spec.terms) {
        if (t.string.num_qubits() != spec.num_qubits) {
            throw DimensionError("Hamiltonian term width does not match the system");
        }
        if (!t.string.is_identity()) {
            out.push_back(t.string);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t chain_case_span(char case_id) {
    switch (case_id) {
        case 'a':
        case 'b':
            return 1;
        case 'c':
        case 'd':
            return 2;
        case 'e':
        case 'f':
            return 3;
        default:
            throw InputError(std::string("unknown measurement case '") + case_id + "'");
    }
}

PauliString chain_case_seed(char case_id, std::size_t num_qubits) {
    static constexpr Cell cells[6][3] = {
        {Cell::X, Cell::I, Cell::I}, {Cell::Z, Cell::I, Cell::I}, {Cell::Z, Cell::Y, Cell::I},
        {Cell::Y, Cell::Z, Cell::I}, {Cell::Z, Cell::Z, Cell::X}, {Cell::X, Cell::Y, Cell::Z},
    };
    std::size_t span = chain_case_span(case_id);
    PauliString p(num_qubits);
    for (std::size_t j = 0; j < std::min(span, num_qubits); ++j) {
        p.set(j, cells[case_id - 'a'][j]);
    }
    return p;
}

}  // namespace paccess
