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

#include "paccess/closure.h"

#include <algorithm>
#include <complex>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "paccess/errors.h"
#include "paccess/parallel.h"

namespace paccess {

namespace {

std::size_t common_width(std::span<const PauliString> digamma, std::span<const PauliString> seeds) {
    if (seeds.empty()) {
        throw InputError("accessible set generation needs at least one seed");
    }
    std::size_t n = seeds.front().num_qubits();
    for (const auto &p : seeds) {
        if (p.num_qubits() != n) {
            throw DimensionError("seed strings act on different qubit counts");
        }
    }
    for (const auto &p : digamma) {
        if (p.num_qubits() != n) {
            throw DimensionError("Hamiltonian strings and seeds act on different qubit counts");
        }
    }
    return n;
}

std::vector<PauliString> canonical_digamma(std::span<const PauliString> digamma) {
    std::vector<PauliString> out;
    for (const auto &p : digamma) {
        if (!p.is_identity()) {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

using DenseMatrix = Eigen::MatrixXcd;

DenseMatrix sigma(Cell c) {
    using cd = std::complex<double>;
    DenseMatrix m(2, 2);
    switch (c) {
        case Cell::I:
            m << 1, 0, 0, 1;
            break;
        case Cell::X:
            m << 0, 1, 1, 0;
            break;
        case Cell::Y:
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case Cell::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

DenseMatrix kron_dense(const PauliString &p) {
    DenseMatrix m = sigma(p.cell(0));
    for (std::size_t j = 1; j < p.num_qubits(); ++j) {
        DenseMatrix next = Eigen::kroneckerProduct(m, sigma(p.cell(j))).eval();
        m = std::move(next);
    }
    return m;
}

}  // namespace

std::unordered_map<PauliString, std::size_t, PauliStringHash> AccessibleSet::index() const {
    std::unordered_map<PauliString, std::size_t, PauliStringHash> out;
    out.reserve(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        out.emplace(members[i], i);
    }
    return out;
}

std::vector<PauliString> AccessibleSet::sorted_members() const {
    std::vector<PauliString> out = members;
    std::sort(out.begin(), out.end());
    return out;
}

AccessibleSet generate(std::span<const PauliString> digamma, std::span<const PauliString> seeds,
                       GenerateOptions options) {
    std::size_t n = common_width(digamma, seeds);
    std::vector<PauliString> ham = canonical_digamma(digamma);

    AccessibleSet set;
    set.num_qubits = n;
    std::unordered_map<PauliString, std::size_t, PauliStringHash> seen;
    std::vector<std::size_t> frontier;
    for (const auto &s : seeds) {
        if (seen.emplace(s, set.members.size()).second) {
            frontier.push_back(set.members.size());
            set.members.push_back(s);
            set.provenance.push_back({});
        }
    }

    // |Omega| = 4^n bounds any closure; exceeding it means the dedup is broken.
    std::size_t limit = n < 31 ? (std::size_t{1} << (2 * n)) : static_cast<std::size_t>(-1);

    struct Hit {
        std::size_t edge;
        PauliString string;
    };
    while (!frontier.empty()) {
        std::vector<std::vector<Hit>> hits(frontier.size());
        parallel_for(frontier.size(), options.threads, [&](std::size_t f) {
            const PauliString &tau = set.members[frontier[f]];
            for (std::size_t e = 0; e < ham.size(); ++e) {
                if (auto r = bracket_normalized(tau, ham[e])) {
                    hits[f].push_back({e, std::move(*r)});
                }
            }
        });
        std::vector<std::size_t> next;
        for (std::size_t f = 0; f < frontier.size(); ++f) {
            for (auto &hit : hits[f]) {
                if (!seen.emplace(hit.string, set.members.size()).second) {
                    continue;
                }
                next.push_back(set.members.size());
                set.members.push_back(std::move(hit.string));
                set.provenance.push_back({frontier[f], ham[hit.edge]});
                if (set.members.size() > limit) {
                    throw ConsistencyError("accessible set outgrew the 4^n operator space");
                }
            }
        }
        frontier = std::move(next);
    }
    return set;
}

AccessibleSet generate_reference(std::span<const PauliString> digamma, std::span<const PauliString> seeds,
                                 std::size_t qubit_cap) {
    std::size_t n = common_width(digamma, seeds);
    if (n > qubit_cap) {
        throw InputError(
            "reference generation is capped at " + std::to_string(qubit_cap) + " qubits, got " + std::to_string(n));
    }

    std::size_t count = std::size_t{1} << (2 * n);
    std::vector<PauliString> candidates;
    std::vector<DenseMatrix> dense;
    candidates.reserve(count);
    dense.reserve(count);
    for (std::size_t code = 0; code < count; ++code) {
        PauliString p(n);
        for (std::size_t j = 0; j < n; ++j) {
            p.set(j, static_cast<Cell>((code >> (2 * j)) & 3));
        }
        dense.push_back(kron_dense(p));
        candidates.push_back(std::move(p));
    }
    std::vector<DenseMatrix> ham;
    std::vector<PauliString> ham_strings;
    for (const auto &p : digamma) {
        ham.push_back(kron_dense(p));
        ham_strings.push_back(p);
    }

    AccessibleSet set;
    set.num_qubits = n;
    std::vector<bool> in_set(count, false);
    auto code_of = [&](const PauliString &p) {
        std::size_t code = 0;
        for (std::size_t j = 0; j < n; ++j) {
            code |= static_cast<std::size_t>(p.cell(j)) << (2 * j);
        }
        return code;
    };
    std::vector<std::size_t> frontier;
    for (const auto &s : seeds) {
        std::size_t code = code_of(s);
        if (!in_set[code]) {
            in_set[code] = true;
            frontier.push_back(set.members.size());
            set.members.push_back(s);
            set.provenance.push_back({});
        }
    }

    // Members already processed in an earlier round contribute nothing new, so
    // each round only needs the operators added by the previous one.
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
            const DenseMatrix &tau = dense[code_of(set.members[idx])];
            for (std::size_t e = 0; e < ham.size(); ++e) {
                DenseMatrix comm = tau * ham[e] - ham[e] * tau;
                for (std::size_t code = 0; code < count; ++code) {
                    if (in_set[code]) {
                        continue;
                    }
                    std::complex<double> overlap = (dense[code].conjugate().cwiseProduct(comm)).sum();
                    if (std::abs(overlap) > 1e-9) {
                        in_set[code] = true;
                        next.push_back(set.members.size());
                        set.members.push_back(candidates[code]);
                        set.provenance.push_back({idx, ham_strings[e]});
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return set;
}

AccessibleSet chain_closed_form(std::size_t num_qubits, std::size_t m, ChainAxis axis) {
    if (m < 1 || m > num_qubits) {
        throw InputError("closed form needs 1 <= m <= n, got m = " + std::to_string(m));
    }
    Cell same = axis == ChainAxis::X ? Cell::X : Cell::Y;
    Cell other = axis == ChainAxis::X ? Cell::Y : Cell::X;
    std::size_t seed = m - 1;
    auto member = [&](std::size_t last) {
        PauliString p(num_qubits);
        for (std::size_t j = 0; j < last; ++j) {
            p.set(j, Cell::Z);
        }
        std::size_t distance = last > seed ? last - seed : seed - last;
        p.set(last, distance % 2 == 0 ? same : other);
        return p;
    };
    // The coupling between neighbors repeats the end cell of the one reaching
    // further right.
    auto coupling = [&](std::size_t lo, Cell c) {
        PauliString edge(num_qubits);
        edge.set(lo, c);
        edge.set(lo + 1, c);
        return edge;
    };

    AccessibleSet set;
    set.num_qubits = num_qubits;
    set.members.push_back(member(seed));
    set.provenance.push_back({});
    for (std::size_t last = seed + 1; last < num_qubits; ++last) {
        set.members.push_back(member(last));
        set.provenance.push_back({set.size() - 2, coupling(last - 1, set.members.back().cell(last))});
    }
    for (std::size_t last = seed; last-- > 0;) {
        std::size_t parent = last + 1 == seed ? 0 : set.size() - 1;
        Cell c = set.members[parent].cell(last + 1);
        set.members.push_back(member(last));
        set.provenance.push_back({parent, coupling(last, c)});
    }
    return set;
}

}  // namespace paccess
