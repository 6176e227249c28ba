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

#include "paccess/verify.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <set>

#include "paccess/errors.h"
#include "paccess/graph.h"
#include "paccess/oracle_sim.h"
#include "paccess/statespace.h"

namespace paccess {

namespace {

std::size_t parse_count(std::string_view text) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("invalid size '" + std::string(text) + "'");
    }
    return v;
}

std::vector<double> unit_couplings(std::size_t n) { return std::vector<double>(n - 1, 1.0); }

std::vector<PauliString> chain_digamma(std::size_t n) {
    auto h = unit_couplings(n);
    return decomposed_digamma(build_exchange_chain(n, h));
}

PauliString random_string(std::size_t n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> cell(0, 3);
    PauliString p(n);
    for (std::size_t j = 0; j < n; ++j) {
        p.set(j, static_cast<Cell>(cell(rng)));
    }
    return p;
}

ProductState random_product_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    ProductState state;
    for (std::size_t j = 0; j < n; ++j) {
        std::array<double, 3> v{gauss(rng), gauss(rng), gauss(rng)};
        double norm = std::hypot(v[0], v[1], v[2]);
        state.bloch.push_back({v[0] / norm, v[1] / norm, v[2] / norm});
    }
    return state;
}

struct Recorder {
    SuiteReport &report;

    void check(bool ok, const std::string &what) {
        report.lines.push_back((ok ? "ok   " : "FAIL ") + what);
        if (!ok) {
            ++report.failures;
        }
    }
};

void suite_oracle(SizeRange range, unsigned threads, Recorder &rec) {
    std::size_t hi = std::min(range.hi, kReferenceQubitCap);
    for (std::size_t n = std::max<std::size_t>(range.lo, 2); n <= hi; ++n) {
        auto dig = chain_digamma(n);
        for (char c : kChainCases) {
            std::vector<PauliString> seeds{chain_case_seed(c, n)};
            auto fast = generate(dig, seeds, {threads});
            auto slow = generate_reference(dig, seeds);
            rec.check(fast.sorted_members() == slow.sorted_members(),
                      "n=" + std::to_string(n) + " case " + c + ": " + std::to_string(fast.size()) + " members");
        }
    }
}

void suite_prop2(SizeRange range, unsigned threads, Recorder &rec) {
    for (std::size_t n = std::max<std::size_t>(range.lo, 2); n <= range.hi; ++n) {
        auto dig = chain_digamma(n);
        std::size_t bad = 0;
        for (std::size_t m = 1; m <= n; ++m) {
            for (ChainAxis axis : {ChainAxis::X, ChainAxis::Y}) {
                auto closed = chain_closed_form(n, m, axis);
                std::vector<PauliString> seeds{closed.members.front()};
                if (generate(dig, seeds, {threads}).sorted_members() != closed.sorted_members()) {
                    ++bad;
                }
            }
        }
        rec.check(bad == 0, "n=" + std::to_string(n) + ": " + std::to_string(2 * n) + " closed forms, " +
                                std::to_string(bad) + " mismatches");
    }
}

void suite_case_d(SizeRange range, unsigned threads, Recorder &rec) {
    for (std::size_t n = std::max<std::size_t>(range.lo, 2); n <= range.hi; ++n) {
        auto set = chain_set(n, chain_case_seed('d', n), threads);
        auto part = partition_k_finite(set);
        bool ok = set.size() == (n * n * n - n * n) / 2 && part.blocks.size() == n - 1;
        std::string sizes;
        for (std::size_t b = 0; b < part.blocks.size(); ++b) {
            std::size_t k = part.blocks[b].k;
            ok = ok && k == b + 2 && part.blocks[b].members.size() == (3 * k - 2) * (k - 1) / 2;
            sizes += (b ? "," : "") + std::to_string(part.blocks[b].members.size());
        }
        rec.check(ok, "n=" + std::to_string(n) + ": |G|=" + std::to_string(set.size()) + " blocks " + sizes);
    }
}

void suite_lemmas(SizeRange range, unsigned threads, Recorder &rec) {
    for (std::size_t n = std::max<std::size_t>(range.lo, 2); n <= range.hi; ++n) {
        auto dig = chain_digamma(n);
        for (char c : kChainCases) {
            std::vector<PauliString> seeds{chain_case_seed(c, n)};
            auto set = generate(dig, seeds, {threads});
            auto graph = build_graph(set, dig, threads);
            auto part = partition_k_finite(set);
            auto regen = verify_block_regeneration(set, part, dig);
            bool regen_ok = std::all_of(regen.begin(), regen.end(), [](const auto &r) { return r.pass; });
            bool ok = check_edge_symmetry(set, graph) && is_connected(graph) && regen_ok;
            rec.check(ok, "n=" + std::to_string(n) + " case " + c + ": " + std::to_string(graph.edges().size()) +
                              " edges, " + std::to_string(regen.size()) + " regenerations");
        }
    }
}

void suite_blocks(SizeRange range, unsigned threads, Recorder &rec) {
    std::size_t top = std::max<std::size_t>(range.hi, 2);
    {
        auto set = chain_set(top, chain_case_seed('b', top), threads);
        auto part = partition_k_finite(set);
        auto block = [&](std::size_t b) {
            std::set<PauliString> out;
            for (std::size_t m : part.blocks[b].members) {
                out.insert(set.members[m]);
            }
            return out;
        };
        std::set<PauliString> k1{parse_pauli_string("Z1", top)};
        std::set<PauliString> k2{parse_pauli_string("Z2", top), parse_pauli_string("X1 Y2", top),
                                 parse_pauli_string("Y1 X2", top)};
        rec.check(part.blocks.size() >= 2 && block(0) == k1 && block(1) == k2,
                  "case b n=" + std::to_string(top) + ": blocks 1 and 2");
    }
    for (char c : kChainCases) {
        auto full = chain_set(top, chain_case_seed(c, top), threads);
        auto part = partition_k_finite(full);
        bool ok = true;
        for (std::size_t i = std::max({range.lo, std::size_t{2}, chain_case_span(c)}); i < top; ++i) {
            auto small = chain_set(i, chain_case_seed(c, i), threads);
            std::set<std::string> lhs, rhs;
            for (const auto &m : small.members) {
                lhs.insert(m.str());
            }
            for (const auto &b : part.blocks) {
                if (b.k <= i) {
                    for (std::size_t m : b.members) {
                        rhs.insert(full.members[m].str());
                    }
                }
            }
            ok = ok && lhs == rhs;
        }
        rec.check(ok, std::string("case ") + c + ": prefix sets nest inside n=" + std::to_string(top));
    }
}

void suite_trajectory(SizeRange range, unsigned threads, std::uint64_t seed, Recorder &rec) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coupling(0.5, 2.0);
    auto times = parse_time_grid("0:10:0.05");
    for (std::size_t n = std::max<std::size_t>(range.lo, 2); n <= std::min<std::size_t>(range.hi, 5); ++n) {
        for (char c : kChainCases) {
            if (chain_case_span(c) > n) {
                continue;
            }
            std::vector<double> h(n - 1);
            for (double &v : h) {
                v = coupling(rng);
            }
            auto spec = build_exchange_chain(n, h);
            auto dig = decomposed_digamma(spec);
            PauliString m = chain_case_seed(c, n);
            std::vector<PauliString> seeds{m};
            auto set = generate(dig, seeds, {threads});
            auto graph = build_graph(set, dig, threads);
            auto ordered = order_members(set, graph, partition_k_finite(set)).set;
            auto meas = MeasurementSpec::from_operators(n, {WeightedPauliSum(n, {{1.0, m}})});
            auto model = build_model(ordered, spec, meas, threads);
            auto state = random_product_state(n, rng);
            auto x0 = initial_state_vector(state, ordered.members);
            auto dense = evolve_expectation(spec, meas.operators[0], state.density_matrix(), times);
            auto expm = simulate_reduced(model, x0, times);
            auto rk = simulate_reduced(model, x0, times, {Integrator::RungeKutta4, 1e-3});
            double err_expm = 0, err_rk = 0;
            for (std::size_t t = 0; t < times.size(); ++t) {
                err_expm = std::max(err_expm, std::abs(expm.y[t][0] - dense[t]));
                err_rk = std::max(err_rk, std::abs(rk.y[t][0] - dense[t]));
            }
            char buf[96];
            std::snprintf(buf, sizeof buf, ": expm err %.2e, rk4 err %.2e", err_expm, err_rk);
            rec.check(err_expm <= 1e-8 && err_rk <= 1e-6, "n=" + std::to_string(n) + " case " + c + buf);
        }
    }
}

void suite_appendix(SizeRange range, std::uint64_t seed, Recorder &rec) {
    std::mt19937_64 rng(seed);
    constexpr std::size_t kInstances = 500;

    std::size_t bilinear_bad = 0;
    std::uniform_int_distribution<std::size_t> width(1, 2);
    for (std::size_t i = 0; i < kInstances; ++i) {
        // a, b on the first wa sites and d, e on the next wd.
        std::size_t wa = width(rng), wd = width(rng);
        auto embed = [&](std::size_t offset, std::size_t w) {
            PauliString p = random_string(wa + wd, rng);
            for (std::size_t j = 0; j < wa + wd; ++j) {
                if (j < offset || j >= offset + w) {
                    p.set(j, Cell::I);
                }
            }
            return p;
        };
        auto a = embed(0, wa), b = embed(0, wa);
        auto d = embed(wa, wd), e = embed(wa, wd);
        if (!check_bilinear_decomposition(a, d, b, e)) {
            ++bilinear_bad;
        }
    }
    rec.check(bilinear_bad == 0, "bilinear decomposition: " + std::to_string(kInstances) + " instances, " +
                                     std::to_string(bilinear_bad) + " failures");

    std::size_t n = std::clamp<std::size_t>(range.hi, 2, 6);
    auto dig = chain_digamma(n);
    std::uniform_int_distribution<std::size_t> pick(0, dig.size() - 1), length(1, 8);
    std::size_t perm_done = 0, perm_bad = 0, pair_done = 0, pair_bad = 0;
    for (std::size_t attempt = 0; attempt < 400 * kInstances && (perm_done < kInstances || pair_done < kInstances);
         ++attempt) {
        auto start = random_string(n, rng);
        std::vector<PauliString> edges;
        for (std::size_t len = length(rng); edges.size() < len;) {
            edges.push_back(dig[pick(rng)]);
        }
        auto end = walk_edges(start, edges);
        if (!end) {
            continue;
        }
        if (perm_done < kInstances) {
            auto shuffled = edges;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            if (auto other = walk_edges(start, shuffled)) {
                ++perm_done;
                perm_bad += *other != *end;
            }
        }
        if (pair_done < kInstances) {
            auto extended = edges;
            const auto &extra = dig[pick(rng)];
            std::uniform_int_distribution<std::size_t> slot(0, extended.size());
            extended.insert(extended.begin() + static_cast<std::ptrdiff_t>(slot(rng)), extra);
            extended.insert(extended.begin() + static_cast<std::ptrdiff_t>(slot(rng)), extra);
            if (auto other = walk_edges(start, extended)) {
                ++pair_done;
                pair_bad += *other != *end;
            }
        }
    }
    rec.check(perm_done == kInstances && perm_bad == 0,
              "edging permutation: " + std::to_string(perm_done) + " instances, " + std::to_string(perm_bad) +
                  " failures");
    rec.check(pair_done == kInstances && pair_bad == 0,
              "even-pair removal: " + std::to_string(pair_done) + " instances, " + std::to_string(pair_bad) +
                  " failures");
}

}  // namespace

std::optional<PauliString> walk_edges(const PauliString &start, std::span<const PauliString> edges) {
    PauliString cur = start;
    for (const auto &e : edges) {
        auto next = bracket_normalized(cur, e);
        if (!next) {
            return std::nullopt;
        }
        cur = std::move(*next);
    }
    return cur;
}

AccessibleSet chain_set(std::size_t num_qubits, const PauliString &seed, unsigned threads) {
    std::vector<PauliString> seeds{seed};
    return generate(chain_digamma(num_qubits), seeds, {threads});
}

SizeRange parse_size_range(std::string_view text) {
    auto dots = text.find("..");
    SizeRange r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = parse_count(text);
    } else {
        r.lo = parse_count(text.substr(0, dots));
        r.hi = parse_count(text.substr(dots + 2));
    }
    if (r.lo > r.hi) {
        throw InputError("size range must be ascending");
    }
    return r;
}

std::vector<std::string> suite_names() {
    return {"oracle", "prop1", "prop2", "case-d-count", "lemmas", "blocks", "trajectory", "appendix"};
}

SuiteReport run_suite(std::string_view name, SizeRange range, unsigned threads, std::uint64_t seed) {
    SuiteReport report;
    report.name = std::string(name);
    Recorder rec{report};
    if (name == "oracle" || name == "prop1") {
        suite_oracle(range, threads, rec);
    } else if (name == "prop2") {
        suite_prop2(range, threads, rec);
    } else if (name == "case-d-count") {
        suite_case_d(range, threads, rec);
    } else if (name == "lemmas") {
        suite_lemmas(range, threads, rec);
    } else if (name == "blocks") {
        suite_blocks(range, threads, rec);
    } else if (name == "trajectory") {
        suite_trajectory(range, threads, seed, rec);
    } else if (name == "appendix") {
        suite_appendix(range, seed, rec);
    } else {
        throw InputError("unknown suite '" + std::string(name) + "'");
    }
    if (report.lines.empty()) {
        rec.check(false, "no instances in the requested size range");
    }
    return report;
}

}  // namespace paccess
