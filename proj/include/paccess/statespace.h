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

#ifndef PACCESS_STATESPACE_H
#define PACCESS_STATESPACE_H

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "paccess/closure.h"
#include "paccess/hamiltonian.h"

namespace paccess {

struct Triplet {
    std::size_t row = 0;
    std::size_t col = 0;
    double value = 0;
};

/// Coordinate-format real matrix, entries sorted by (row, col) with no repeats.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Triplet> entries;

    Eigen::MatrixXd dense() const;
    /// y = M x
    void multiply(std::span<const double> x, std::span<double> y) const;
    /// True iff M + M^T == 0 exactly.
    bool is_antisymmetric() const;
};

/// x' = A x + B x0, y = C x over expectation values of `ordering`.
struct StateSpaceModel {
    std::vector<PauliString> ordering;
    SparseMatrix a;
    /// Always the zero matrix: a closed accessible set leaves no forcing term.
    SparseMatrix b;
    SparseMatrix c;
    /// For each entry of `a`, the Hamiltonian term indices that contributed to it.
    std::vector<std::vector<std::size_t>> a_terms;
    std::vector<WeightedPauliSum> measurements;
};

/// A[j][l] sums -h_m c over Hamiltonian terms (h_m, H_m) with [H_m, O_j] = i c O_l.
/// Row r of C holds measurement r's Pauli coefficients at the matching coordinates.
StateSpaceModel build_model(const AccessibleSet &set, const HamiltonianSpec &spec, const MeasurementSpec &meas,
                            unsigned threads = 1);

/// Unentangled state given by one Bloch vector per site.
struct ProductState {
    std::vector<std::array<double, 3>> bloch;

    /// Comma-separated kets per site from {0, 1, +, -, i+, i-}, e.g. "0,1,+,0".
    static ProductState parse(std::string_view text);
    Eigen::MatrixXcd density_matrix() const;
};

/// x0[k] = Tr(O_k rho) for a density matrix; validates trace, hermiticity and positivity.
std::vector<double> initial_state_vector(const Eigen::MatrixXcd &rho, std::span<const PauliString> ordering);
/// Product-state expectations, site by site. Works for any qubit count.
std::vector<double> initial_state_vector(const ProductState &state, std::span<const PauliString> ordering);

enum class Integrator { MatrixExponential, RungeKutta4 };

struct SimulateOptions {
    Integrator integrator = Integrator::MatrixExponential;
    double step = 1e-3;
};

/// Above this state dimension only the stepping integrator is available.
inline constexpr std::size_t kExpmStateCap = 2000;

struct Trajectory {
    std::vector<double> times;
    /// x[t][k]
    std::vector<std::vector<double>> x;
    /// y[t][r]
    std::vector<std::vector<double>> y;
    std::vector<std::string> diagnostics;
};

Trajectory simulate_reduced(const StateSpaceModel &model, std::span<const double> x0, std::span<const double> times,
                            SimulateOptions options = {});

/// "start:stop:step" -> start, start + step, ... up to stop inclusive.
std::vector<double> parse_time_grid(std::string_view text);

}  // namespace paccess

#endif
