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

#include "paccess/graph.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "paccess/errors.h"
#include "paccess/parallel.h"

namespace paccess {

namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

// Narrowest trailing support wins: the member whose lowest non-identity site is
// highest, then lowest weight, then canonical order.
std::size_t pick_core(const AccessibleSet &set, std::span<const std::size_t> candidates) {
    return *std::min_element(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
        const auto &pa = set.members[a];
        const auto &pb = set.members[b];
        auto la = pa.lowest_site().value_or(0), lb = pb.lowest_site().value_or(0);
        if (la != lb) {
            return la > lb;
        }
        auto wa = pa.weight(), wb = pb.weight();
        if (wa != wb) {
            return wa < wb;
        }
        return pa < pb;
    });
}

std::string dot_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

}  // namespace

AccessGraph::AccessGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), neighbors_(vertex_count) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge &edge = edges_[e];
        if (edge.u >= edge.v || edge.v >= vertex_count) {
            throw InputError("edges must satisfy u < v < vertex_count");
        }
        if (e > 0 && std::tie(edges_[e - 1].u, edges_[e - 1].v) >= std::tie(edge.u, edge.v)) {
            throw InputError("edges must be sorted by (u, v) without duplicates");
        }
        neighbors_[edge.u].push_back(e);
        neighbors_[edge.v].push_back(e);
    }
    for (std::size_t v = 0; v < vertex_count; ++v) {
        auto &list = neighbors_[v];
        std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) { return other(a, v) < other(b, v); });
    }
}

std::size_t AdjacencyMatrix::row_sum(std::size_t i) const {
    std::size_t total = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        total += bits_[i * n_ + j];
    }
    return total;
}

AccessGraph build_graph(const AccessibleSet &set, std::span<const PauliString> digamma, unsigned threads) {
    std::vector<PauliString> ham;
    for (const auto &p : digamma) {
        if (p.num_qubits() != set.num_qubits) {
            throw DimensionError("Hamiltonian strings and accessible set act on different qubit counts");
        }
        if (!p.is_identity()) {
            ham.push_back(p);
        }
    }
    std::sort(ham.begin(), ham.end());
    ham.erase(std::unique(ham.begin(), ham.end()), ham.end());

    auto index = set.index();
    std::vector<std::vector<Edge>> found(set.size());
    parallel_for(set.size(), threads, [&](std::size_t m) {
        for (const auto &nu : ham) {
            auto r = bracket_normalized(set.members[m], nu);
            if (!r) {
                continue;
            }
            auto it = index.find(*r);
            if (it == index.end()) {
                throw ConsistencyError("[" + set.members[m].str() + ", " + nu.str() + "] leaves the set at " +
                                       r->str() + "; the set is not closed");
            }
            std::size_t n = it->second;
            if (n == m) {
                throw ConsistencyError("bracket produced a loop at " + r->str());
            }
            found[m].push_back({std::min(m, n), std::max(m, n), nu});
        }
    });

    // Each edge is normally discovered from both endpoints with the same label.
    std::vector<Edge> all;
    for (auto &list : found) {
        for (auto &e : list) {
            all.push_back(std::move(e));
        }
    }
    std::sort(all.begin(), all.end(), [](const Edge &a, const Edge &b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v) || (std::tie(a.u, a.v) == std::tie(b.u, b.v) && a.label < b.label);
    });
    std::vector<Edge> edges;
    for (auto &e : all) {
        if (!edges.empty() && edges.back().u == e.u && edges.back().v == e.v) {
            if (edges.back().label != e.label) {
                throw ConsistencyError("two labels on the edge " + set.members[e.u].str() + " -- " +
                                       set.members[e.v].str());
            }
            continue;
        }
        edges.push_back(std::move(e));
    }
    return AccessGraph(set.size(), std::move(edges));
}

AdjacencyMatrix adjacency_matrix(const AccessGraph &graph) {
    AdjacencyMatrix adj(graph.vertex_count());
    for (const auto &e : graph.edges()) {
        adj.set(e.u, e.v);
        adj.set(e.v, e.u);
    }
    return adj;
}

std::vector<std::vector<std::size_t>> connected_components(const AccessGraph &graph) {
    std::size_t n = graph.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) {
            continue;
        }
        std::vector<std::size_t> comp{start};
        seen[start] = true;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t e : graph.incident(comp[i])) {
                std::size_t w = graph.other(e, comp[i]);
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const AccessGraph &graph) {
    return connected_components(graph).size() <= 1;
}

bool check_edge_symmetry(const AccessibleSet &set, const AccessGraph &graph) {
    for (const auto &e : graph.edges()) {
        if (e.u == e.v) {
            return false;
        }
        auto forward = bracket_normalized(set.members[e.u], e.label);
        auto backward = bracket_normalized(set.members[e.v], e.label);
        if (!forward || !backward || *forward != set.members[e.v] || *backward != set.members[e.u]) {
            return false;
        }
    }
    return true;
}

KFinitePartition partition_k_finite(const AccessibleSet &set) {
    std::map<std::size_t, std::vector<std::size_t>> by_k;
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto top = set.members[i].highest_site();
        if (!top) {
            throw InputError("the identity string has no k-finite block");
        }
        by_k[*top + 1].push_back(i);
    }
    KFinitePartition out;
    for (auto &[k, members] : by_k) {
        out.cores.push_back(pick_core(set, members));
        out.blocks.push_back({k, std::move(members)});
    }
    return out;
}

OrderResult order_members(const AccessibleSet &set, const AccessGraph &graph, const KFinitePartition &partition) {
    std::size_t n = set.size();
    if (graph.vertex_count() != n) {
        throw InputError("graph and set disagree on the number of members");
    }
    std::vector<std::size_t> block_of(n, kUnset);
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
        for (std::size_t m : partition.blocks[b].members) {
            if (m >= n || block_of[m] != kUnset) {
                throw InputError("partition does not cover each member exactly once");
            }
            block_of[m] = b;
        }
    }
    if (std::find(block_of.begin(), block_of.end(), kUnset) != block_of.end()) {
        throw InputError("partition does not cover each member exactly once");
    }

    auto components = connected_components(graph);
    // Order components by their canonically smallest member.
    std::vector<std::pair<const PauliString *, std::size_t>> comp_keys;
    for (std::size_t c = 0; c < components.size(); ++c) {
        const PauliString *best = nullptr;
        for (std::size_t v : components[c]) {
            if (!best || set.members[v] < *best) {
                best = &set.members[v];
            }
        }
        comp_keys.emplace_back(best, c);
    }
    std::sort(comp_keys.begin(), comp_keys.end(), [](const auto &a, const auto &b) { return *a.first < *b.first; });
    std::vector<std::size_t> comp_of(n);
    for (std::size_t c = 0; c < components.size(); ++c) {
        for (std::size_t v : components[c]) {
            comp_of[v] = c;
        }
    }

    OrderResult result;
    std::vector<std::size_t> order;  // new position -> old index
    std::vector<PartitionBlock> blocks;
    std::vector<std::size_t> cores;
    std::vector<char> placed(n, 0);
    for (const auto &[key, c] : comp_keys) {
        for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
            std::vector<std::size_t> sub;
            for (std::size_t m : partition.blocks[b].members) {
                if (comp_of[m] == c) {
                    sub.push_back(m);
                }
            }
            if (sub.empty()) {
                continue;
            }
            std::size_t core = partition.cores.size() > b &&
                                       std::find(sub.begin(), sub.end(), partition.cores[b]) != sub.end()
                                   ? partition.cores[b]
                                   : pick_core(set, sub);
            std::size_t start = order.size();
            std::vector<std::size_t> walk{core};
            std::vector<char> visited(n, 0);
            visited[core] = 1;
            for (std::size_t i = 0; i < walk.size(); ++i) {
                std::vector<std::size_t> next;
                for (std::size_t e : graph.incident(walk[i])) {
                    std::size_t w = graph.other(e, walk[i]);
                    if (!visited[w] && block_of[w] == b) {
                        next.push_back(w);
                    }
                }
                std::sort(next.begin(), next.end(),
                          [&](std::size_t x, std::size_t y) { return set.members[x] < set.members[y]; });
                for (std::size_t w : next) {
                    if (!visited[w]) {
                        visited[w] = 1;
                        walk.push_back(w);
                    }
                }
            }
            if (walk.size() != sub.size()) {
                result.warnings.push_back("block k=" + std::to_string(partition.blocks[b].k) +
                                          " has a disconnected induced subgraph; kept generation order");
                walk = sub;
            }
            for (std::size_t m : walk) {
                placed[m] = 1;
                order.push_back(m);
            }
            blocks.push_back({partition.blocks[b].k, start, order.size()});
            cores.push_back(core);
        }
    }

    std::vector<std::size_t> new_pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        new_pos[order[i]] = i;
    }
    AccessibleSet &out = result.set;
    out.num_qubits = set.num_qubits;
    out.partition = std::move(blocks);
    for (std::size_t c : cores) {
        out.cores.push_back(new_pos[c]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t old = order[i];
        out.members.push_back(set.members[old]);
        const Provenance &p = set.provenance[old];
        if (p.is_seed()) {
            out.provenance.push_back({});
            continue;
        }
        std::size_t best = kUnset, best_edge = kUnset;
        for (std::size_t e : graph.incident(old)) {
            std::size_t pos = new_pos[graph.other(e, old)];
            if (pos < i && pos < best) {
                best = pos;
                best_edge = e;
            }
        }
        if (best != kUnset) {
            out.provenance.push_back({best, graph.edges()[best_edge].label});
        } else {
            out.provenance.push_back({new_pos[*p.parent], p.edge});
        }
    }
    return result;
}

std::vector<RegenerationCheck> verify_block_regeneration(const AccessibleSet &set, const KFinitePartition &partition,
                                                         std::span<const PauliString> digamma) {
    std::vector<RegenerationCheck> report;
    for (const auto &block : partition.blocks) {
        std::vector<PauliString> sub_ham;
        for (const auto &p : digamma) {
            if (!p.is_identity() && p.supported_below(block.k)) {
                sub_ham.push_back(p);
            }
        }
        std::unordered_set<PauliString, PauliStringHash> expected;
        for (std::size_t m : block.members) {
            expected.insert(set.members[m]);
        }
        for (std::size_t m : block.members) {
            std::unordered_set<PauliString, PauliStringHash> reached{set.members[m]};
            std::vector<PauliString> queue{set.members[m]};
            bool ok = true;
            for (std::size_t i = 0; i < queue.size() && ok; ++i) {
                for (const auto &nu : sub_ham) {
                    auto r = bracket_normalized(queue[i], nu);
                    if (!r || r->highest_site() != block.k - 1) {
                        continue;
                    }
                    if (!expected.count(*r)) {
                        ok = false;
                        break;
                    }
                    if (reached.insert(*r).second) {
                        queue.push_back(std::move(*r));
                    }
                }
            }
            report.push_back({block.k, set.members[m], ok && reached.size() == expected.size()});
        }
    }
    return report;
}

std::string export_dot(const AccessibleSet &set, const AccessGraph &graph, const KFinitePartition &partition) {
    std::ostringstream out;
    out << "graph access {\n";
    if (set.size() > 0) {
        out << "  node [shape=box];\n";
    }
    std::vector<bool> clustered(set.size(), false);
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
        const auto &block = partition.blocks[b];
        out << "  subgraph cluster_" << b << " {\n";
        out << "    label=\"k=" << block.k << "\";\n";
        for (std::size_t m : block.members) {
            clustered[m] = true;
            out << "    v" << m << " [label=\"" << dot_escape(set.members[m].str()) << "\"";
            if (b < partition.cores.size() && partition.cores[b] == m) {
                out << ", peripheries=2";
            }
            out << "];\n";
        }
        out << "  }\n";
    }
    for (std::size_t m = 0; m < set.size(); ++m) {
        if (!clustered[m]) {
            out << "  v" << m << " [label=\"" << dot_escape(set.members[m].str()) << "\"];\n";
        }
    }
    for (const auto &e : graph.edges()) {
        out << "  v" << e.u << " -- v" << e.v << " [label=\"" << dot_escape(e.label.str()) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace paccess
