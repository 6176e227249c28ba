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

#ifndef PACCESS_PAULI_SUM_H
#define PACCESS_PAULI_SUM_H

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "paccess/pauli_string.h"

namespace paccess {

using ComplexMatrix = Eigen::MatrixXcd;

/// Largest qubit count for which dense 2^n x 2^n matrices are built.
inline constexpr std::size_t kDenseQubitCap = 10;

/// Coefficients below this magnitude are dropped by `decompose`.
inline constexpr double kDecomposeTolerance = 1e-10;

struct PauliTerm {
    double coefficient = 0;
    PauliString string;
};

/// Real linear combination of Pauli strings, kept canonical: strings unique and
/// sorted, no zero coefficients.
class WeightedPauliSum {
   public:
    explicit WeightedPauliSum(std::size_t num_qubits) : n_(num_qubits) {}
    /// Merges duplicates and drops exact zeros.
    WeightedPauliSum(std::size_t num_qubits, const std::vector<PauliTerm> &terms);

    static WeightedPauliSum parse(std::string_view text, std::size_t num_qubits);

    std::size_t num_qubits() const { return n_; }
    const std::vector<PauliTerm> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(double coefficient, const PauliString &string);

    /// Coefficient of `string`, 0 when absent.
    double coefficient_of(const PauliString &string) const;

    std::string str() const;

    bool operator==(const WeightedPauliSum &other) const;

   private:
    std::size_t n_;
    std::vector<PauliTerm> terms_;
};

/// Parses `0.5 * X1 X2 + 0.5 * Y1 Y2` style text into raw terms, in source order,
/// without merging duplicates or dropping zeros.
std::vector<PauliTerm> parse_terms(std::string_view text, std::size_t num_qubits);

/// Inverse of `parse_terms`: "c * P + c * P - c * P".
std::string format_terms(const std::vector<PauliTerm> &terms);

/// Shortest text that parses back to exactly `value`.
std::string format_real(double value);

/// Dense 2^n x 2^n matrix; site 1 is the most significant tensor factor.
ComplexMatrix to_dense(const PauliString &p);
ComplexMatrix to_dense(const WeightedPauliSum &sum);

/// Tr(P M) without building P densely.
std::complex<double> trace_with(const PauliString &p, const ComplexMatrix &m);

/// Minimal Pauli basis expansion of a Hermitian matrix, coefficients
/// Tr(P H) / 2^n, magnitudes below kDecomposeTolerance dropped.
WeightedPauliSum decompose(const ComplexMatrix &hermitian);
WeightedPauliSum decompose(const WeightedPauliSum &sum);

/// Dense check of [a (x) d, b (x) e] = [a, b] (x) de + ba (x) [d, e], where a and b
/// live on one block of sites and d and e on a disjoint block.
bool check_bilinear_decomposition(
    const PauliString &a, const PauliString &d, const PauliString &b, const PauliString &e);

}  // namespace paccess

#endif
