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

#include "paccess/pauli_sum.h"

#include <algorithm>
#include <bit>
#include <complex>

#include "paccess/errors.h"

namespace paccess {

namespace {

using cd = std::complex<double>;

void require_dense_width(std::size_t n) {
    if (n > kDenseQubitCap) {
        throw InputError(
            "dense matrices are limited to " + std::to_string(kDenseQubitCap) + " qubits, got " + std::to_string(n));
    }
}

// Site j maps to bit (n - 1 - j) of a computational basis index.
std::uint64_t basis_mask(std::span<const std::uint64_t> words, std::size_t n) {
    std::uint64_t mask = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if ((words[j / 64] >> (j % 64)) & 1) {
            mask |= std::uint64_t{1} << (n - 1 - j);
        }
    }
    return mask;
}

const cd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

WeightedPauliSum::WeightedPauliSum(std::size_t num_qubits, const std::vector<PauliTerm> &terms) : n_(num_qubits) {
    for (const auto &t : terms) {
        add(t.coefficient, t.string);
    }
}

WeightedPauliSum WeightedPauliSum::parse(std::string_view text, std::size_t num_qubits) {
    return WeightedPauliSum(num_qubits, parse_terms(text, num_qubits));
}

void WeightedPauliSum::add(double coefficient, const PauliString &string) {
    if (string.num_qubits() != n_) {
        throw DimensionError("term width does not match the sum's qubit count");
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), string,
                               [](const PauliTerm &t, const PauliString &s) { return t.string < s; });
    if (it != terms_.end() && it->string == string) {
        it->coefficient += coefficient;
        if (it->coefficient == 0) {
            terms_.erase(it);
        }
        return;
    }
    if (coefficient != 0) {
        terms_.insert(it, PauliTerm{coefficient, string});
    }
}

double WeightedPauliSum::coefficient_of(const PauliString &string) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), string,
                               [](const PauliTerm &t, const PauliString &s) { return t.string < s; });
    return (it != terms_.end() && it->string == string) ? it->coefficient : 0.0;
}

std::string WeightedPauliSum::str() const {
    return terms_.empty() ? "0 * I" : format_terms(terms_);
}

bool WeightedPauliSum::operator==(const WeightedPauliSum &other) const {
    if (n_ != other.n_ || terms_.size() != other.terms_.size()) {
        return false;
    }
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (terms_[k].string != other.terms_[k].string || terms_[k].coefficient != other.terms_[k].coefficient) {
            return false;
        }
    }
    return true;
}

ComplexMatrix to_dense(const PauliString &p) {
    std::size_t n = p.num_qubits();
    require_dense_width(n);
    std::size_t dim = std::size_t{1} << n;
    std::uint64_t x = basis_mask(p.x_words(), n);
    std::uint64_t z = basis_mask(p.z_words(), n);
    // P = i^{|x&z|} X^x Z^z, so P|s> = i^{|x&z|} (-1)^{|z&s|} |s ^ x>.
    cd base = kIPow[std::popcount(x & z) % 4];
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (std::uint64_t s = 0; s < dim; ++s) {
        m(s ^ x, s) = (std::popcount(z & s) & 1) ? -base : base;
    }
    return m;
}

std::complex<double> trace_with(const PauliString &p, const ComplexMatrix &m) {
    std::size_t n = p.num_qubits();
    require_dense_width(n);
    std::size_t dim = std::size_t{1} << n;
    if (static_cast<std::size_t>(m.rows()) != dim || static_cast<std::size_t>(m.cols()) != dim) {
        throw DimensionError("matrix dimension does not match the Pauli string width");
    }
    std::uint64_t x = basis_mask(p.x_words(), n);
    std::uint64_t z = basis_mask(p.z_words(), n);
    cd sum = 0;
    for (std::uint64_t s = 0; s < dim; ++s) {
        cd v = m(s, s ^ x);
        sum += (std::popcount(z & s) & 1) ? -v : v;
    }
    return kIPow[std::popcount(x & z) % 4] * sum;
}

ComplexMatrix to_dense(const WeightedPauliSum &sum) {
    require_dense_width(sum.num_qubits());
    std::size_t dim = std::size_t{1} << sum.num_qubits();
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    for (const auto &t : sum.terms()) {
        m += t.coefficient * to_dense(t.string);
    }
    return m;
}

WeightedPauliSum decompose(const ComplexMatrix &h) {
    if (h.rows() != h.cols() || h.rows() == 0 || !std::has_single_bit(static_cast<std::uint64_t>(h.rows()))) {
        throw DimensionError("matrix must be square with a power-of-two dimension");
    }
    std::size_t dim = static_cast<std::size_t>(h.rows());
    std::size_t n = static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(dim)));
    if (n == 0) {
        throw DimensionError("a 1x1 matrix is not an operator on qubits");
    }
    require_dense_width(n);
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw InputError("matrix is not Hermitian");
    }

    // For each X-pattern x, Tr(P_{x,z} H) over all z is a Walsh-Hadamard
    // transform of the diagonal band v[s] = H(s, s ^ x).
    WeightedPauliSum out(n);
    std::vector<cd> v(dim);
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t s = 0; s < dim; ++s) {
            v[s] = h(s, s ^ x);
        }
        for (std::size_t len = 1; len < dim; len <<= 1) {
            for (std::size_t i = 0; i < dim; i += 2 * len) {
                for (std::size_t j = i; j < i + len; ++j) {
                    cd a = v[j], b = v[j + len];
                    v[j] = a + b;
                    v[j + len] = a - b;
                }
            }
        }
        for (std::uint64_t z = 0; z < dim; ++z) {
            double c = (kIPow[std::popcount(x & z) % 4] * v[z]).real() / static_cast<double>(dim);
            if (std::abs(c) < kDecomposeTolerance) {
                continue;
            }
            PauliString p(n);
            for (std::size_t j = 0; j < n; ++j) {
                bool xb = (x >> (n - 1 - j)) & 1, zb = (z >> (n - 1 - j)) & 1;
                p.set(j, xb ? (zb ? Cell::Y : Cell::X) : (zb ? Cell::Z : Cell::I));
            }
            out.add(c, p);
        }
    }
    return out;
}

WeightedPauliSum decompose(const WeightedPauliSum &sum) {
    WeightedPauliSum out(sum.num_qubits());
    for (const auto &t : sum.terms()) {
        if (std::abs(t.coefficient) >= kDecomposeTolerance) {
            out.add(t.coefficient, t.string);
        }
    }
    return out;
}

bool check_bilinear_decomposition(
    const PauliString &a, const PauliString &d, const PauliString &b, const PauliString &e) {
    std::size_t n = a.num_qubits();
    if (d.num_qubits() != n || b.num_qubits() != n || e.num_qubits() != n) {
        throw DimensionError("all four strings must act on the same qubits");
    }
    for (std::size_t j = 0; j < n; ++j) {
        bool left = a.cell(j) != Cell::I || b.cell(j) != Cell::I;
        bool right = d.cell(j) != Cell::I || e.cell(j) != Cell::I;
        if (left && right) {
            throw InputError("site " + std::to_string(j + 1) + " is used by both blocks");
        }
    }
    ComplexMatrix ma = to_dense(a), md = to_dense(d), mb = to_dense(b), me = to_dense(e);
    // Disjoint supports: the tensor product is the ordinary product of embeddings.
    ComplexMatrix lhs_l = ma * md, lhs_r = mb * me;
    ComplexMatrix lhs = lhs_l * lhs_r - lhs_r * lhs_l;
    ComplexMatrix rhs = (ma * mb - mb * ma) * (md * me) + (mb * ma) * (md * me - me * md);
    return (lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12;
}

}  // namespace paccess
