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

#ifndef PACCESS_ORACLE_SIM_H
#define PACCESS_ORACLE_SIM_H

#include <cstddef>
#include <span>
#include <vector>

#include "paccess/hamiltonian.h"
#include "paccess/pauli_sum.h"

namespace paccess {

inline constexpr std::size_t kMaxBchOrder = 20;

/// Exact dense evolution of a time-independent Hamiltonian, diagonalized once.
class DenseEvolution {
   public:
    /// Throws InputError above `qubit_cap` qubits.
    explicit DenseEvolution(const HamiltonianSpec &spec, std::size_t qubit_cap = kDenseQubitCap);

    std::size_t num_qubits() const { return n_; }
    const ComplexMatrix &hamiltonian() const { return h_; }

    /// U(t) = exp(-i H t).
    ComplexMatrix propagator(double t) const;
    /// M(t) = U(t)^dagger M U(t).
    ComplexMatrix heisenberg(const ComplexMatrix &m, double t) const;
    /// Tr(M(t) rho) for each t.
    std::vector<double> expectation(const WeightedPauliSum &meas, const ComplexMatrix &rho,
                                    std::span<const double> times) const;

   private:
    std::size_t n_;
    ComplexMatrix h_;
    Eigen::VectorXd energies_;
    ComplexMatrix vectors_;
};

/// Tr(M U rho U^dagger) over `times`; validates rho like initial_state_vector.
std::vector<double> evolve_expectation(const HamiltonianSpec &spec, const WeightedPauliSum &meas,
                                       const ComplexMatrix &rho, std::span<const double> times,
                                       std::size_t qubit_cap = kDenseQubitCap);

/// max |U^dagger U - I| entry.
double unitarity_error(const ComplexMatrix &u);

/// ad_H^k(M) = [H, [H, ..., [H, M]]] for k = 0..order.
std::vector<ComplexMatrix> nested_commutators(const HamiltonianSpec &spec, const ComplexMatrix &m, std::size_t order,
                                              std::size_t qubit_cap = kDenseQubitCap);

/// sum_{k <= order} (i t)^k / k! ad_H^k(M).
ComplexMatrix bch_partial_sum(const HamiltonianSpec &spec, const PauliString &meas, std::size_t order, double t,
                              std::size_t qubit_cap = kDenseQubitCap);

}  // namespace paccess

#endif
