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

#ifndef PACCESS_IO_H
#define PACCESS_IO_H

#include <string>
#include <string_view>
#include <vector>

#include "paccess/closure.h"
#include "paccess/graph.h"
#include "paccess/hamiltonian.h"
#include "paccess/statespace.h"

namespace paccess {

inline constexpr std::string_view kSpecSchema = "pauli-access-spec/1";

/// Contents of a spec file: a Hamiltonian and optional measurement texts.
struct SpecFile {
    HamiltonianSpec hamiltonian;
    std::vector<std::string> measurements;
};

/// {"schema": "pauli-access-spec/1", "n_qubits": n,
///  "terms": [{"coeff": c, "string": "X1 X2", "label": "..."}],
///  "measurements": ["Z1", ...]}
SpecFile spec_from_json(std::string_view text);
std::string spec_to_json(const SpecFile &spec);

/// {"n_qubits", "members", "provenance": [{"parent", "edge"}], "partition": [{"k", "start", "end"}], "cores"}
std::string set_to_json(const AccessibleSet &set);
AccessibleSet set_from_json(std::string_view text);
/// One member per line.
std::string set_to_text(const AccessibleSet &set);

/// {"vertices", "edges": [{"u", "v", "label"}], "blocks": [{"k", "members", "core"}]}
std::string graph_to_json(const AccessibleSet &set, const AccessGraph &graph, const KFinitePartition &partition);

/// {"n_qubits", "ordering", "measurements", "A", "B", "C"}, each matrix as
/// {"rows", "cols", "entries": [[row, col, value], ...]}; A also carries "terms".
std::string model_to_json(const StateSpaceModel &model);
/// Throws ConsistencyError if A is not antisymmetric.
StateSpaceModel model_from_json(std::string_view text);

/// Header "t,x_1,...,x_No,y_1,...,y_r", one row per time.
std::string trajectory_to_csv(const Trajectory &trajectory);

/// Whole file as a string; InputError if it cannot be read.
std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view content);

}  // namespace paccess

#endif
