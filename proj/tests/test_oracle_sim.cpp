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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dense_oracle.h"
#include "paccess/errors.h"
#include "paccess/oracle_sim.h"
#include "paccess/statespace.h"
#include "paccess/verify.h"

namespace paccess {
namespace {

PauliString P(std::string_view text, std::size_t n) { return parse_pauli_string(text, n); }

HamiltonianSpec chain(std::vector<double> h) { return build_exchange_chain(h.size() + 1, h); }

WeightedPauliSum single(const PauliString &p) { return WeightedPauliSum(p.num_qubits(), {{1.0, p}}); }

TEST(EvolveExpectation, ZeroHamiltonianIsConstant) {
    auto spec = chain({0.0, 0.0});
    std::mt19937_64 rng(51);
    auto bloch = oracle::random_bloch(3, rng);
    oracle::Mat rho = oracle::product_density(bloch);
    auto m = WeightedPauliSum::parse("0.3 * Z1 X2 + Y3", 3);
    std::vector<double> times{0, 0.5, 3, 10};
    double expect = (oracle::dense(P("Z1 X2", 3)) * rho).trace().real() * 0.3 +
                    (oracle::dense(P("Y3", 3)) * rho).trace().real();
    for (double v : evolve_expectation(spec, m, rho, times)) {
        EXPECT_NEAR(v, expect, 1e-13);
    }
}

TEST(EvolveExpectation, TwoSiteExchangeIsCos4ht) {
    for (double h : {1.0, 0.7}) {
        auto spec = chain({h});
        oracle::Mat rho = oracle::product_density({{0, 0, 1}, {0, 0, -1}});
        std::vector<double> times;
        for (int i = 0; i <= 100; ++i) times.push_back(0.1 * i);
        auto y = evolve_expectation(spec, single(P("Z1", 2)), rho, times);
        for (std::size_t i = 0; i < times.size(); ++i) {
            EXPECT_NEAR(y[i], std::cos(4 * h * times[i]), 1e-12);
        }
    }
}

TEST(EvolveExpectation, MatchesMatrixExponentialOracle) {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> u(0.5, 2);
    for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<double> h(n - 1);
        for (auto &v : h) v = u(rng);
        auto spec = chain(h);
        auto bloch = oracle::random_bloch(n, rng);
        oracle::Mat rho = oracle::product_density(bloch);
        auto m = chain_case_seed('f', n);
        std::vector<double> times{0, 0.3, 1.7, 4.2, 9.9};
        auto y = evolve_expectation(spec, single(m), rho, times);
        for (std::size_t i = 0; i < times.size(); ++i) {
            EXPECT_NEAR(y[i], oracle::schrodinger_expectation(oracle::hamiltonian(spec), oracle::dense(m), rho, times[i]),
                        1e-10);
        }
    }
}

TEST(EvolveExpectation, AtZeroEqualsInitialStateInnerProduct) {
    std::mt19937_64 rng(53);
    auto spec = chain({1.0, 2.0, 0.5});
    ProductState state{oracle::random_bloch(4, rng)};
    auto m = WeightedPauliSum::parse("0.5 * Z1 Z2 X3 - 2 * Y4", 4);
    std::vector<PauliString> strings{P("Z1 Z2 X3", 4), P("Y4", 4)};
    auto x0 = initial_state_vector(state, strings);
    std::vector<double> t0{0};
    EXPECT_NEAR(evolve_expectation(spec, m, state.density_matrix(), t0)[0], 0.5 * x0[0] - 2 * x0[1], 1e-13);
}

TEST(EvolveExpectation, Errors) {
    auto spec = chain(std::vector<double>(10, 1.0));
    std::vector<double> t{0};
    EXPECT_THROW(DenseEvolution{spec}, InputError);
    auto small = chain({1.0});
    EXPECT_THROW(evolve_expectation(small, single(P("Z1", 2)), Eigen::MatrixXcd::Identity(4, 4), t), InputError);
    EXPECT_THROW(evolve_expectation(small, single(P("Z1", 2)), Eigen::MatrixXcd::Identity(2, 2) / 2.0, t),
                 DimensionError);
    EXPECT_THROW((DenseEvolution{small, 11}), InputError);
}

TEST(Propagator, IsUnitaryAndMatchesExponential) {
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> u(-2, 2);
    for (std::size_t n = 2; n <= 6; ++n) {
        std::vector<double> h(n - 1);
        for (auto &v : h) v = u(rng);
        DenseEvolution ev(chain(h));
        for (double t : {0.0, 0.37, 5.0, 50.0}) {
            auto uu = ev.propagator(t);
            EXPECT_LE(unitarity_error(uu), 1e-10);
            if (n <= 4) {
                oracle::Mat ref = (oracle::cd(0, -t) * oracle::hamiltonian(chain(h))).exp();
                EXPECT_LE(oracle::max_abs(uu - ref), 1e-9);
            }
        }
    }
}

TEST(Bch, OrderZeroIsTheMeasurement) {
    auto spec = chain({1.0, 1.0});
    auto m = P("Z1 Y2", 3);
    EXPECT_LE(oracle::max_abs(bch_partial_sum(spec, m, 0, 0.4) - oracle::dense(m)), 0.0);
}

TEST(Bch, OrderTwelveMatchesHeisenbergPicture) {
    auto spec = chain({1.0});
    auto m = P("Z1", 2);
    DenseEvolution ev(spec);
    oracle::Mat u = ev.propagator(0.1);
    oracle::Mat exact = u.adjoint() * oracle::dense(m) * u;
    EXPECT_LE(oracle::max_abs(bch_partial_sum(spec, m, 12, 0.1) - exact), 1e-8);
    EXPECT_LE(oracle::max_abs(ev.heisenberg(oracle::dense(m), 0.1) - exact), 1e-12);
    EXPECT_THROW(bch_partial_sum(spec, m, kMaxBchOrder + 1, 0.1), InputError);
}

TEST(Bch, NestedCommutatorsStayInsideTheAccessibleSet) {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> u(0.5, 2);
    for (std::size_t n = 2; n <= 4; ++n) {
        for (char c : kChainCases) {
            if (chain_case_span(c) > n) {
                continue;
            }
            std::vector<double> h(n - 1);
            for (auto &v : h) v = u(rng);
            auto spec = chain(h);
            auto seed = chain_case_seed(c, n);
            auto members = chain_set(n, seed).sorted_members();
            auto nested = nested_commutators(spec, oracle::dense(seed), 8);
            ASSERT_EQ(nested.size(), 9u);
            std::size_t seen = 0;
            for (const auto &k : nested) {
                // Order-8 entries reach ~1e9, so the cut is relative to the operator scale.
                for (const auto &[word, coeff] : oracle::expand(k, n, 1e-10 * (1 + oracle::max_abs(k)))) {
                    ASSERT_TRUE(std::binary_search(members.begin(), members.end(), oracle::from_word(word)))
                        << n << c << " " << word;
                    ++seen;
                }
            }
            EXPECT_GT(seen, 0u);
        }
    }
}

}  // namespace
}  // namespace paccess
