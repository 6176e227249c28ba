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

#include "paccess/io.h"

#include <fstream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "paccess/errors.h"

namespace paccess {

namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
}

// Runs `body`, turning JSON shape errors into InputError.
template <typename Body>
auto guarded(std::string_view what, Body &&body) {
    try {
        return body();
    } catch (const json::exception &e) {
        throw InputError("malformed " + std::string(what) + ": " + e.what());
    }
}

std::size_t read_width(const json &j) {
    auto n = j.at("n_qubits").get<std::size_t>();
    if (n == 0) {
        throw InputError("n_qubits must be positive");
    }
    return n;
}

json matrix_to_json(const SparseMatrix &m) {
    json entries = json::array();
    for (const auto &t : m.entries) {
        entries.push_back(json::array({t.row, t.col, t.value}));
    }
    return {{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(entries)}};
}

SparseMatrix matrix_from_json(const json &j, std::string_view name) {
    SparseMatrix m;
    m.rows = j.at("rows").get<std::size_t>();
    m.cols = j.at("cols").get<std::size_t>();
    for (const auto &e : j.at("entries")) {
        if (!e.is_array() || e.size() != 3) {
            throw InputError(std::string(name) + " entries must be [row, col, value] triples");
        }
        Triplet t{e[0].get<std::size_t>(), e[1].get<std::size_t>(), e[2].get<double>()};
        if (t.row >= m.rows || t.col >= m.cols) {
            throw InputError(std::string(name) + " entry outside the matrix");
        }
        if (!m.entries.empty() && std::tie(m.entries.back().row, m.entries.back().col) >= std::tie(t.row, t.col)) {
            throw InputError(std::string(name) + " entries must be sorted by (row, col) without repeats");
        }
        m.entries.push_back(t);
    }
    return m;
}

}  // namespace

SpecFile spec_from_json(std::string_view text) {
    json j = parse_json(text);
    return guarded("spec file", [&] {
        if (!j.contains("schema") || j.at("schema").get<std::string>() != kSpecSchema) {
            throw InputError("spec file must declare schema \"" + std::string(kSpecSchema) + "\"");
        }
        SpecFile out;
        std::size_t n = read_width(j);
        out.hamiltonian.num_qubits = n;
        for (const auto &t : j.at("terms")) {
            std::string label = t.contains("label") ? t.at("label").get<std::string>() : std::string();
            out.hamiltonian.terms.push_back({t.at("coeff").get<double>(),
                                             parse_pauli_string(t.at("string").get<std::string>(), n),
                                             std::move(label)});
        }
        if (j.contains("measurements")) {
            out.measurements = j.at("measurements").get<std::vector<std::string>>();
        }
        return out;
    });
}

std::string spec_to_json(const SpecFile &spec) {
    json terms = json::array();
    for (const auto &t : spec.hamiltonian.terms) {
        json term = {{"coeff", t.coefficient}, {"string", t.string.str()}};
        if (!t.label.empty()) {
            term["label"] = t.label;
        }
        terms.push_back(std::move(term));
    }
    json j = {{"schema", std::string(kSpecSchema)}, {"n_qubits", spec.hamiltonian.num_qubits}, {"terms", std::move(terms)}};
    if (!spec.measurements.empty()) {
        j["measurements"] = spec.measurements;
    }
    return j.dump(2) + "\n";
}

std::string set_to_json(const AccessibleSet &set) {
    json members = json::array(), provenance = json::array(), partition = json::array();
    for (const auto &m : set.members) {
        members.push_back(m.str());
    }
    for (const auto &p : set.provenance) {
        json entry = {{"parent", nullptr}, {"edge", nullptr}};
        if (p.parent) {
            entry["parent"] = *p.parent;
        }
        if (p.edge) {
            entry["edge"] = p.edge->str();
        }
        provenance.push_back(std::move(entry));
    }
    for (const auto &b : set.partition) {
        partition.push_back({{"k", b.k}, {"start", b.begin}, {"end", b.end}});
    }
    json j = {{"n_qubits", set.num_qubits},
              {"members", std::move(members)},
              {"provenance", std::move(provenance)},
              {"partition", std::move(partition)},
              {"cores", set.cores}};
    return j.dump(2) + "\n";
}

AccessibleSet set_from_json(std::string_view text) {
    json j = parse_json(text);
    return guarded("accessible set", [&] {
        AccessibleSet set;
        set.num_qubits = read_width(j);
        for (const auto &m : j.at("members")) {
            set.members.push_back(parse_pauli_string(m.get<std::string>(), set.num_qubits));
        }
        if (set.index().size() != set.members.size()) {
            throw InputError("accessible set members must be distinct");
        }
        if (j.contains("provenance")) {
            for (const auto &p : j.at("provenance")) {
                Provenance prov;
                if (!p.at("parent").is_null()) {
                    prov.parent = p.at("parent").get<std::size_t>();
                }
                if (!p.at("edge").is_null()) {
                    prov.edge = parse_pauli_string(p.at("edge").get<std::string>(), set.num_qubits);
                }
                set.provenance.push_back(std::move(prov));
            }
        } else {
            set.provenance.resize(set.members.size());
        }
        if (set.provenance.size() != set.members.size()) {
            throw InputError("provenance and members differ in length");
        }
        for (const auto &p : set.provenance) {
            if (p.parent && *p.parent >= set.members.size()) {
                throw InputError("provenance parent index out of range");
            }
        }
        if (j.contains("partition")) {
            for (const auto &b : j.at("partition")) {
                PartitionBlock block{b.at("k").get<std::size_t>(), b.at("start").get<std::size_t>(),
                                     b.at("end").get<std::size_t>()};
                if (block.begin > block.end || block.end > set.members.size()) {
                    throw InputError("partition block out of range");
                }
                set.partition.push_back(block);
            }
        }
        if (j.contains("cores")) {
            set.cores = j.at("cores").get<std::vector<std::size_t>>();
        }
        return set;
    });
}

std::string set_to_text(const AccessibleSet &set) {
    std::string out;
    for (const auto &m : set.members) {
        out += m.str();
        out += '\n';
    }
    return out;
}

std::string graph_to_json(const AccessibleSet &set, const AccessGraph &graph, const KFinitePartition &partition) {
    json vertices = json::array(), edges = json::array(), blocks = json::array();
    for (const auto &m : set.members) {
        vertices.push_back(m.str());
    }
    for (const auto &e : graph.edges()) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"label", e.label.str()}});
    }
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
        json block = {{"k", partition.blocks[b].k}, {"members", partition.blocks[b].members}};
        if (b < partition.cores.size()) {
            block["core"] = partition.cores[b];
        }
        blocks.push_back(std::move(block));
    }
    json j = {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}, {"blocks", std::move(blocks)}};
    return j.dump(2) + "\n";
}

std::string model_to_json(const StateSpaceModel &model) {
    json ordering = json::array(), measurements = json::array();
    for (const auto &p : model.ordering) {
        ordering.push_back(p.str());
    }
    for (const auto &m : model.measurements) {
        measurements.push_back(m.str());
    }
    json a = matrix_to_json(model.a);
    a["terms"] = model.a_terms;
    std::size_t n = model.ordering.empty() ? 0 : model.ordering.front().num_qubits();
    json j = {{"n_qubits", n},
              {"ordering", std::move(ordering)},
              {"measurements", std::move(measurements)},
              {"A", std::move(a)},
              {"B", matrix_to_json(model.b)},
              {"C", matrix_to_json(model.c)}};
    return j.dump(2) + "\n";
}

StateSpaceModel model_from_json(std::string_view text) {
    json j = parse_json(text);
    StateSpaceModel model = guarded("model", [&] {
        StateSpaceModel m;
        std::size_t n = read_width(j);
        for (const auto &p : j.at("ordering")) {
            m.ordering.push_back(parse_pauli_string(p.get<std::string>(), n));
        }
        for (const auto &s : j.at("measurements")) {
            m.measurements.push_back(WeightedPauliSum::parse(s.get<std::string>(), n));
        }
        m.a = matrix_from_json(j.at("A"), "A");
        m.b = matrix_from_json(j.at("B"), "B");
        m.c = matrix_from_json(j.at("C"), "C");
        if (j.at("A").contains("terms")) {
            m.a_terms = j.at("A").at("terms").get<std::vector<std::vector<std::size_t>>>();
        }
        return m;
    });
    std::size_t size = model.ordering.size();
    if (model.a.rows != size || model.a.cols != size || model.b.rows != size || model.b.cols != size ||
        model.c.cols != size || model.c.rows != model.measurements.size()) {
        throw DimensionError("model matrices do not match the ordering and measurement counts");
    }
    if (!model.a_terms.empty() && model.a_terms.size() != model.a.entries.size()) {
        throw InputError("A terms and entries differ in length");
    }
    if (!model.a.is_antisymmetric()) {
        throw ConsistencyError("model A matrix is not antisymmetric");
    }
    return model;
}

std::string trajectory_to_csv(const Trajectory &trajectory) {
    std::size_t states = trajectory.x.empty() ? 0 : trajectory.x.front().size();
    std::size_t outputs = trajectory.y.empty() ? 0 : trajectory.y.front().size();
    std::string out = "t";
    for (std::size_t k = 1; k <= states; ++k) {
        out += ",x_" + std::to_string(k);
    }
    for (std::size_t r = 1; r <= outputs; ++r) {
        out += ",y_" + std::to_string(r);
    }
    out += '\n';
    for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
        out += format_real(trajectory.times[i]);
        for (double v : trajectory.x[i]) {
            out += ',' + format_real(v);
        }
        for (double v : trajectory.y[i]) {
            out += ',' + format_real(v);
        }
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write " + path);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw InputError("failed writing " + path);
    }
}

}  // namespace paccess
