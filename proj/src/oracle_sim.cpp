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

#include "paccess/oracle_sim.h"

#include <cmath>
#include <complex>

#include "paccess/errors.h"

namespace paccess {

namespace {

using cd = std::complex<double>;

void require_cap(std::size_t n, std::size_t cap) {
    if (cap > kDenseQubitCap) {
        throw InputError("dense cap cannot exceed " + std::to_string(kDenseQubitCap) + " qubits");
    }
    if (n > cap) {
        throw InputError("dense simulation is capped at " + std::to_string(cap) + " qubits, got " + std::to_string(n));
    }
}

void check_density(const ComplexMatrix &rho, std::size_t dim) {
    if (static_cast<std::size_t>(rho.rows()) != dim || static_cast<std::size_t>(rho.cols()) != dim) {
        throw DimensionError("density matrix dimension does not match the Hamiltonian");
    }
    if (std::abs(rho.trace() - cd(1, 0)) > 1e-10) {
        throw InputError("density matrix must have unit trace");
    }
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw InputError("density matrix must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-10) {
        throw InputError("density matrix must be positive semidefinite");
    }
}

ComplexMatrix dense_hamiltonian(const HamiltonianSpec &spec, std::size_t cap) {
    require_cap(spec.num_qubits, cap);
    std::size_t dim = std::size_t{1} << spec.num_qubits;
    ComplexMatrix h = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &t : spec.terms) {
        h += t.coefficient * to_dense(t.string);
    }
    return h;
}

}  // namespace

DenseEvolution::DenseEvolution(const HamiltonianSpec &spec, std::size_t qubit_cap)
    : n_(spec.num_qubits), h_(dense_hamiltonian(spec, qubit_cap)) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h_);
    energies_ = eig.eigenvalues();
    vectors_ = eig.eigenvectors();
}

ComplexMatrix DenseEvolution::propagator(double t) const {
    Eigen::VectorXcd phases(energies_.size());
    for (Eigen::Index k = 0; k < energies_.size(); ++k) {
        phases[k] = std::polar(1.0, -energies_[k] * t);
    }
    return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

ComplexMatrix DenseEvolution::heisenberg(const ComplexMatrix &m, double t) const {
    ComplexMatrix u = propagator(t);
    return u.adjoint() * m * u;
}

std::vector<double> DenseEvolution::expectation(const WeightedPauliSum &meas, const ComplexMatrix &rho,
                                                std::span<const double> times) const {
    if (meas.num_qubits() != n_) {
        throw DimensionError("measurement and Hamiltonian act on different qubit counts");
    }
    check_density(rho, std::size_t{1} << n_);
    // In the eigenbasis, Tr(M(t) rho) = sum_jk M'_jk rho'_kj e^{i (E_j - E_k) t}.
    ComplexMatrix m = vectors_.adjoint() * to_dense(meas) * vectors_;
    ComplexMatrix r = vectors_.adjoint() * rho * vectors_;
    ComplexMatrix weights = m.cwiseProduct(r.transpose());
    Eigen::Index dim = energies_.size();
    std::vector<double> out;
    out.reserve(times.size());
    for (double t : times) {
        Eigen::VectorXcd phase(dim);
        for (Eigen::Index k = 0; k < dim; ++k) {
            phase[k] = std::polar(1.0, energies_[k] * t);
        }
        cd total = (phase.asDiagonal() * weights * phase.conjugate().asDiagonal()).sum();
        out.push_back(total.real());
    }
    return out;
}

std::vector<double> evolve_expectation(const HamiltonianSpec &spec, const WeightedPauliSum &meas,
                                       const ComplexMatrix &rho, std::span<const double> times, std::size_t qubit_cap) {
    return DenseEvolution(spec, qubit_cap).expectation(meas, rho, times);
}

double unitarity_error(const ComplexMatrix &u) {
    ComplexMatrix diff = u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols());
    return diff.cwiseAbs().maxCoeff();
}

std::vector<ComplexMatrix> nested_commutators(const HamiltonianSpec &spec, const ComplexMatrix &m, std::size_t order,
                                              std::size_t qubit_cap) {
    if (order > kMaxBchOrder) {
        throw InputError("series order is limited to " + std::to_string(kMaxBchOrder));
    }
    ComplexMatrix h = dense_hamiltonian(spec, qubit_cap);
    if (h.rows() != m.rows() || h.cols() != m.cols()) {
        throw DimensionError("operator dimension does not match the Hamiltonian");
    }
    std::vector<ComplexMatrix> out{m};
    for (std::size_t k = 1; k <= order; ++k) {
        const ComplexMatrix &prev = out.back();
        out.push_back(h * prev - prev * h);
    }
    return out;
}

ComplexMatrix bch_partial_sum(const HamiltonianSpec &spec, const PauliString &meas, std::size_t order, double t,
                              std::size_t qubit_cap) {
    if (meas.num_qubits() != spec.num_qubits) {
        throw DimensionError("measurement and Hamiltonian act on different qubit counts");
    }
    auto terms = nested_commutators(spec, to_dense(meas), order, qubit_cap);
    ComplexMatrix sum = ComplexMatrix::Zero(terms[0].rows(), terms[0].cols());
    cd factor = 1;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k > 0) {
            factor *= cd(0, t) / static_cast<double>(k);
        }
        sum += factor * terms[k];
    }
    return sum;
}

}  // namespace paccess
