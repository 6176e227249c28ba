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


#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.h"
#include "paccess/closure.h"
#include "paccess/errors.h"
#include "paccess/graph.h"
#include "paccess/hamiltonian.h"
#include "paccess/verify.h"

namespace paccess {
namespace {

PauliString P(std::string_view text, std::size_t n) { return parse_pauli_string(text, n); }

std::vector<PauliString> chain_digamma(std::size_t n) {
    std::vector<double> h(n - 1, 1.0);
    return decomposed_digamma(build_exchange_chain(n, h));
}

AccessibleSet ordered(std::size_t n, const PauliString &seed) {
    auto d = chain_digamma(n);
    auto set = chain_set(n, seed);
    return order_members(set, build_graph(set, d), partition_k_finite(set)).set;
}

std::size_t find(const AccessibleSet &set, const PauliString &p) {
    auto it = std::find(set.members.begin(), set.members.end(), p);
    return static_cast<std::size_t>(it - set.members.begin());
}

TEST(BuildGraph, CaseBTwoSitesIsAFourCycle) {
    auto d = chain_digamma(2);
    auto set = chain_set(2, P("Z1", 2));
    auto g = build_graph(set, d);
    ASSERT_EQ(g.edges().size(), 4u);
    struct Expect {
        const char *a, *b, *label;
    };
    for (auto [a, b, label] : {Expect{"Z1", "Y1 X2", "X1 X2"}, Expect{"Z1", "X1 Y2", "Y1 Y2"},
                               Expect{"Y1 X2", "Z2", "Y1 Y2"}, Expect{"X1 Y2", "Z2", "X1 X2"}}) {
        std::size_t u = find(set, P(a, 2)), v = find(set, P(b, 2));
        auto it = std::find_if(g.edges().begin(), g.edges().end(), [&](const Edge &e) {
            return e.u == std::min(u, v) && e.v == std::max(u, v);
        });
        ASSERT_NE(it, g.edges().end()) << a << " -- " << b;
        EXPECT_EQ(it->label, P(label, 2));
    }
    auto adj = adjacency_matrix(g);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(adj.row_sum(i), 2u);
        EXPECT_FALSE(adj(i, i));
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_EQ(adj(i, j), adj(j, i));
        }
    }
}

TEST(BuildGraph, SingleMemberHasNoEdges) {
    AccessibleSet set{1, {P("X1", 1)}, {{}}, {}, {}};
    std::vector<PauliString> none;
    auto g = build_graph(set, none);
    EXPECT_TRUE(g.edges().empty());
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(adjacency_matrix(g).row_sum(0), 0u);
}

TEST(BuildGraph, ClosedFormIsAPath) {
    for (std::size_t n = 2; n <= 8; ++n) {
        auto set = chain_closed_form(n, 1, ChainAxis::X);
        auto adj = adjacency_matrix(build_graph(set, chain_digamma(n)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                EXPECT_EQ(adj(i, j), i + 1 == j || j + 1 == i) << n;
            }
        }
    }
}

TEST(BuildGraph, RejectsNonFixpoint) {
    AccessibleSet set{2, {P("Z1", 2), P("Y1 X2", 2)}, {{}, {}}, {}, {}};
    EXPECT_THROW(build_graph(set, chain_digamma(2)), ConsistencyError);
}

TEST(BuildGraph, ThreadCountDoesNotChangeEdges) {
    auto d = chain_digamma(7);
    auto set = chain_set(7, P("Y1 Z2", 7));
    auto one = build_graph(set, d, 1), many = build_graph(set, d, 4);
    ASSERT_EQ(one.edges().size(), many.edges().size());
    for (std::size_t i = 0; i < one.edges().size(); ++i) {
        EXPECT_EQ(one.edges()[i].u, many.edges()[i].u);
        EXPECT_EQ(one.edges()[i].v, many.edges()[i].v);
        EXPECT_EQ(one.edges()[i].label, many.edges()[i].label);
    }
}

TEST(GraphStructure, SimpleSymmetricAndConnectedForAllCases) {
    for (std::size_t n = 2; n <= 8; ++n) {
        auto d = chain_digamma(n);
        for (char c : kChainCases) {
            auto set = chain_set(n, chain_case_seed(c, n));
            auto g = build_graph(set, d);
            EXPECT_TRUE(check_edge_symmetry(set, g)) << n << c;
            EXPECT_TRUE(is_connected(g)) << n << c;
            for (std::size_t i = 1; i < g.edges().size(); ++i) {
                const auto &a = g.edges()[i - 1], &b = g.edges()[i];
                EXPECT_TRUE(a.u < b.u || (a.u == b.u && a.v < b.v));
            }
        }
    }
}

TEST(Components, DisjointChainsSplitInTwo) {
    // Links 1-2 and 3-4 only, seeds on each side.
    std::vector<PauliString> d{P("X1 X2", 4), P("Y1 Y2", 4), P("X3 X4", 4), P("Y3 Y4", 4)};
    std::vector<PauliString> seeds{P("Z1", 4), P("Z3", 4)};
    auto set = generate(d, seeds);
    auto g = build_graph(set, d);
    EXPECT_FALSE(is_connected(g));
    auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].size(), 4u);
    EXPECT_EQ(comps[1].size(), 4u);

    auto result = order_members(set, g, partition_k_finite(set));
    EXPECT_EQ(result.set.sorted_members(), set.sorted_members());
    // The component holding Z3 sorts first canonically, so its blocks come first.
    EXPECT_EQ(result.set.members[0], P("Z3", 4));
}

TEST(Partition, CaseBTwoSites) {
    auto set = chain_set(2, P("Z1", 2));
    auto part = partition_k_finite(set);
    ASSERT_EQ(part.blocks.size(), 2u);
    EXPECT_EQ(part.blocks[0].k, 1u);
    ASSERT_EQ(part.blocks[0].members.size(), 1u);
    EXPECT_EQ(set.members[part.blocks[0].members[0]], P("Z1", 2));
    EXPECT_EQ(part.blocks[1].k, 2u);
    std::vector<PauliString> second;
    for (std::size_t m : part.blocks[1].members) {
        second.push_back(set.members[m]);
    }
    std::sort(second.begin(), second.end());
    std::vector<PauliString> expect{P("Z2", 2), P("X1 Y2", 2), P("Y1 X2", 2)};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(second, expect);
}

TEST(Partition, CaseDFiveSiteBlockSizes) {
    auto part = partition_k_finite(chain_set(5, P("Y1 Z2", 5)));
    std::vector<std::size_t> sizes, ks;
    for (const auto &b : part.blocks) {
        ks.push_back(b.k);
        sizes.push_back(b.members.size());
    }
    EXPECT_EQ(ks, (std::vector<std::size_t>{2, 3, 4, 5}));
    EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 7, 15, 26}));
}

TEST(Partition, ClosedFormBlocksAreSingletons) {
    auto part = partition_k_finite(chain_closed_form(7, 4, ChainAxis::Y));
    ASSERT_EQ(part.blocks.size(), 7u);
    for (const auto &b : part.blocks) {
        EXPECT_EQ(b.members.size(), 1u);
    }
}

TEST(Partition, RejectsIdentity) {
    AccessibleSet set{2, {PauliString(2)}, {{}}, {}, {}};
    EXPECT_THROW(partition_k_finite(set), InputError);
}

TEST(Partition, PrefixChainsNest) {
    for (char c : kChainCases) {
        std::size_t big = 7;
        auto large = ordered(big, chain_case_seed(c, big));
        for (std::size_t i = std::max<std::size_t>(chain_case_span(c), 2); i < big; ++i) {
            auto small = chain_set(i, chain_case_seed(c, i)).sorted_members();
            std::vector<PauliString> prefix;
            for (const auto &b : large.partition) {
                if (b.k > i) {
                    continue;
                }
                for (std::size_t m = b.begin; m < b.end; ++m) {
                    PauliString p(i);
                    for (std::size_t s = 0; s < i; ++s) {
                        p.set(s, large.members[m].cell(s));
                    }
                    prefix.push_back(p);
                }
            }
            std::sort(prefix.begin(), prefix.end());
            EXPECT_EQ(prefix, small) << c << " " << i;
        }
    }
}

TEST(Order, CaseBSixSitesStartsWithZ1ThenBlockTwo) {
    auto set = ordered(6, P("Z1", 6));
    EXPECT_EQ(set.members[0], P("Z1", 6));
    ASSERT_GE(set.partition.size(), 2u);
    EXPECT_EQ(set.partition[0].k, 1u);
    EXPECT_EQ(set.partition[1].k, 2u);
    EXPECT_EQ(set.partition[1].end - set.partition[1].begin, 3u);
    EXPECT_EQ(set.members[set.cores[1]], P("Z2", 6));
    for (std::size_t b = 0; b < set.partition.size(); ++b) {
        EXPECT_EQ(set.partition[b].k, b + 1);
        for (std::size_t m = set.partition[b].begin; m < set.partition[b].end; ++m) {
            EXPECT_EQ(*set.members[m].highest_site() + 1, set.partition[b].k);
        }
    }
}

TEST(Order, CaseDCoresAlternateXAndY) {
    auto set = ordered(4, P("Y1 Z2", 4));
    std::vector<PauliString> cores;
    for (std::size_t c : set.cores) {
        cores.push_back(set.members[c]);
    }
    std::vector<PauliString> expect{P("X2", 4), P("Z2 Y3", 4), P("Z2 Z3 X4", 4)};
    EXPECT_EQ(cores, expect);
    for (std::size_t b = 0; b < set.partition.size(); ++b) {
        EXPECT_EQ(set.cores[b], set.partition[b].begin);
    }
}

TEST(Order, SingleBlockIsBreadthFirstFromCore) {
    // The k=2 block of case (b) on two sites: Z2 first, then its neighbors in canonical order.
    auto set = ordered(2, P("Z1", 2));
    std::vector<PauliString> expect{P("Z1", 2), P("Z2", 2), P("X1 Y2", 2), P("Y1 X2", 2)};
    EXPECT_EQ(set.members, expect);
}

// Block cores lead their block, so a core may have no earlier neighbor (Z_k in
// case (b) touches only blocks k and k+1). Those keep a forward generation parent.
TEST(Order, ProvenancePointsBackWheneverANeighborPrecedes) {
    std::size_t n = 6;
    auto d = chain_digamma(n);
    for (char c : kChainCases) {
        auto set = ordered(n, chain_case_seed(c, n));
        auto g = build_graph(set, d);
        std::size_t forward = 0;
        for (std::size_t i = 0; i < set.size(); ++i) {
            const auto &p = set.provenance[i];
            if (p.is_seed()) {
                continue;
            }
            bool earlier = std::any_of(g.incident(i).begin(), g.incident(i).end(),
                                       [&](std::size_t e) { return g.other(e, i) < i; });
            EXPECT_EQ(*p.parent < i, earlier) << c << " " << set.members[i].str();
            forward += *p.parent > i;
            EXPECT_EQ(*bracket_normalized(set.members[*p.parent], *p.edge), set.members[i]);
        }
        EXPECT_LE(forward, set.partition.size());
    }
}

TEST(Order, InvariantUnderInputPermutation) {
    std::mt19937_64 rng(31);
    for (char c : kChainCases) {
        std::size_t n = 5;
        auto d = chain_digamma(n);
        auto set = chain_set(n, chain_case_seed(c, n));
        auto reference = order_members(set, build_graph(set, d), partition_k_finite(set)).set;
        for (int rep = 0; rep < 5; ++rep) {
            AccessibleSet shuffled{n, set.members, std::vector<Provenance>(set.size()), {}, {}};
            std::shuffle(shuffled.members.begin(), shuffled.members.end(), rng);
            auto result = order_members(shuffled, build_graph(shuffled, d), partition_k_finite(shuffled));
            EXPECT_TRUE(result.warnings.empty());
            EXPECT_EQ(result.set.members, reference.members) << c;
            EXPECT_EQ(result.set.cores, reference.cores);
        }
    }
}

TEST(Regeneration, CaseBAndDFourSitesAllPass) {
    auto d = chain_digamma(4);
    for (const char *seed : {"Z1", "Y1 Z2"}) {
        auto set = chain_set(4, P(seed, 4));
        auto report = verify_block_regeneration(set, partition_k_finite(set), d);
        EXPECT_EQ(report.size(), set.size());
        for (const auto &r : report) {
            EXPECT_TRUE(r.pass) << seed << " k=" << r.k << " " << r.member.str();
        }
    }
}

TEST(Regeneration, SingletonBlockPasses) {
    auto set = chain_closed_form(3, 1, ChainAxis::X);
    auto report = verify_block_regeneration(set, partition_k_finite(set), chain_digamma(3));
    ASSERT_EQ(report.size(), 3u);
    for (const auto &r : report) {
        EXPECT_TRUE(r.pass);
    }
}

TEST(ExportDot, CaseBTwoSitesGolden) {
    auto d = chain_digamma(2);
    auto set = ordered(2, P("Z1", 2));
    auto dot = export_dot(set, build_graph(set, d), partition_k_finite(set));
    const char *golden =
        "graph access {\n"
        "  node [shape=box];\n"
        "  subgraph cluster_0 {\n"
        "    label=\"k=1\";\n"
        "    v0 [label=\"Z1\", peripheries=2];\n"
        "  }\n"
        "  subgraph cluster_1 {\n"
        "    label=\"k=2\";\n"
        "    v1 [label=\"Z2\", peripheries=2];\n"
        "    v2 [label=\"X1 Y2\"];\n"
        "    v3 [label=\"Y1 X2\"];\n"
        "  }\n"
        "  v0 -- v2 [label=\"Y1 Y2\"];\n"
        "  v0 -- v3 [label=\"X1 X2\"];\n"
        "  v1 -- v2 [label=\"X1 X2\"];\n"
        "  v1 -- v3 [label=\"Y1 Y2\"];\n"
        "}\n";
    EXPECT_EQ(dot, golden);
}

TEST(ExportDot, EmptyGraphIsHeaderOnly) {
    AccessibleSet set;
    AccessGraph g(0, {});
    EXPECT_EQ(export_dot(set, g, {}), "graph access {\n}\n");
}

TEST(ExportDot, CaseDThreeSitesClusters) {
    auto d = chain_digamma(3);
    auto set = ordered(3, P("Y1 Z2", 3));
    auto dot = export_dot(set, build_graph(set, d), partition_k_finite(set));
    auto count = [&](const std::string &needle) {
        std::size_t c = 0;
        for (auto pos = dot.find(needle); pos != std::string::npos; pos = dot.find(needle, pos + 1)) {
            ++c;
        }
        return c;
    };
    EXPECT_EQ(count("[label=\"") - count(" -- "), 9u);
    EXPECT_EQ(count("subgraph cluster_"), 2u);
    EXPECT_EQ(set.partition[0].end - set.partition[0].begin, 2u);
    EXPECT_EQ(set.partition[1].end - set.partition[1].begin, 7u);
}

TEST(AccessGraph, RejectsBadEdges) {
    EXPECT_THROW(AccessGraph(2, {Edge{1, 0, P("X1", 1)}}), InputError);
    EXPECT_THROW(AccessGraph(3, {Edge{0, 2, P("X1", 1)}, Edge{0, 1, P("X1", 1)}}), InputError);
}

}  // namespace
}  // namespace paccess
