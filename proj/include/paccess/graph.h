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

#ifndef PACCESS_GRAPH_H
#define PACCESS_GRAPH_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "paccess/closure.h"

namespace paccess {

/// Undirected edge u < v labeled by the Hamiltonian string that maps one
/// endpoint onto the other under the normalized bracket.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    PauliString label;
};

class AccessGraph {
   public:
    /// `edges` must be canonical (u < v), sorted by (u, v) and free of duplicates.
    AccessGraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return neighbors_.size(); }
    const std::vector<Edge> &edges() const { return edges_; }
    /// Indices into edges() touching vertex `v`, ordered by the opposite endpoint.
    const std::vector<std::size_t> &incident(std::size_t v) const { return neighbors_[v]; }
    std::size_t other(std::size_t edge, std::size_t v) const {
        return edges_[edge].u == v ? edges_[edge].v : edges_[edge].u;
    }

   private:
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> neighbors_;
};

/// Dense 0/1 view of the graph, built on demand.
class AdjacencyMatrix {
   public:
    explicit AdjacencyMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}
    std::size_t size() const { return n_; }
    bool operator()(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
    void set(std::size_t i, std::size_t j) { bits_[i * n_ + j] = 1; }
    std::size_t row_sum(std::size_t i) const;
    bool operator==(const AdjacencyMatrix &other) const = default;

   private:
    std::size_t n_;
    std::vector<std::uint8_t> bits_;
};

struct KFiniteBlock {
    std::size_t k = 0;
    std::vector<std::size_t> members;
};

struct KFinitePartition {
    std::vector<KFiniteBlock> blocks;
    /// Member index of each block's core operator.
    std::vector<std::size_t> cores;
};

struct OrderResult {
    AccessibleSet set;
    std::vector<std::string> warnings;
};

struct RegenerationCheck {
    std::size_t k = 0;
    PauliString member;
    bool pass = false;
};

/// Edges (m, n, nu) for every member m and digamma string nu with
/// bracket_normalized(O_m, nu) = O_n. Throws ConsistencyError if a bracket
/// leaves the set (the set is not a fixpoint) or a pair gets two labels.
AccessGraph build_graph(const AccessibleSet &set, std::span<const PauliString> digamma, unsigned threads = 1);

AdjacencyMatrix adjacency_matrix(const AccessGraph &graph);

bool is_connected(const AccessGraph &graph);
/// Components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<std::size_t>> connected_components(const AccessGraph &graph);

/// No loops, and the normalized bracket maps each edge's endpoints onto each other
/// in both directions with the stored label.
bool check_edge_symmetry(const AccessibleSet &set, const AccessGraph &graph);

/// Groups members by highest non-identity site k. Blocks ascend in k; members keep
/// their set order inside a block. The core of a block is the member whose lowest
/// non-identity site is highest, ties broken by weight and then canonical order.
KFinitePartition partition_k_finite(const AccessibleSet &set);

/// Reorders the set block by block (ascending k). Inside a block, members follow a
/// breadth-first walk of the block's induced subgraph from its core, neighbors
/// visited in canonical order. Disconnected graphs are ordered one component at a
/// time; a block whose induced subgraph is disconnected keeps its set order and
/// adds a warning. Provenance is rewritten so each parent precedes its child
/// wherever a preceding neighbor exists.
OrderResult order_members(const AccessibleSet &set, const AccessGraph &graph, const KFinitePartition &partition);

/// For every block k and member O, closes {O} under the digamma strings supported
/// on sites <= k while discarding results that are not k-finite, and checks that
/// the closure is exactly the block.
std::vector<RegenerationCheck> verify_block_regeneration(const AccessibleSet &set, const KFinitePartition &partition,
                                                         std::span<const PauliString> digamma);

/// Graphviz text with one cluster per block. Byte-stable for fixed inputs.
std::string export_dot(const AccessibleSet &set, const AccessGraph &graph, const KFinitePartition &partition);

}  // namespace paccess

#endif
