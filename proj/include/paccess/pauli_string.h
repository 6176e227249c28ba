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

#ifndef PACCESS_PAULI_STRING_H
#define PACCESS_PAULI_STRING_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace paccess {

/// Single-site operator. The numeric value is the canonical sort key I < X < Y < Z.
enum class Cell : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char cell_char(Cell c);

/// Phase-free tensor product of single-site Paulis over `num_qubits()` sites.
///
/// Stored as two bit planes: x bit set iff the site carries X or Y, z bit set iff
/// it carries Z or Y. Sites are 0-based in the API and 1-based in text form.
/// Strings on up to 128 qubits live inline; wider strings spill to the heap.
class PauliString {
   public:
    /// Identity on `num_qubits` sites.
    explicit PauliString(std::size_t num_qubits);

    static PauliString single(std::size_t num_qubits, std::size_t site, Cell c);

    std::size_t num_qubits() const { return n_; }
    std::size_t num_words() const { return words_.size() / 2; }
    std::span<const std::uint64_t> x_words() const { return {words_.data(), num_words()}; }
    std::span<const std::uint64_t> z_words() const { return {words_.data() + num_words(), num_words()}; }

    Cell cell(std::size_t site) const;
    void set(std::size_t site, Cell c);

    bool is_identity() const;
    std::size_t weight() const;
    /// 0-based index of the highest non-identity site; empty for the identity.
    std::optional<std::size_t> highest_site() const;
    /// 0-based index of the lowest non-identity site; empty for the identity.
    std::optional<std::size_t> lowest_site() const;
    /// True iff every non-identity site lies in [0, limit).
    bool supported_below(std::size_t limit) const;

    /// Text form, e.g. "Z1 Z2 X3"; the identity prints as "I".
    std::string str() const;

    std::size_t hash() const;

    bool operator==(const PauliString &other) const = default;
    /// Canonical order: lexicographic over sites 1..n, comparing cells as I < X < Y < Z.
    /// Strings of different width order by width first.
    std::strong_ordering operator<=>(const PauliString &other) const;

    // Word-level access for the algebra kernels.
    std::uint64_t *x_data() { return words_.data(); }
    std::uint64_t *z_data() { return words_.data() + num_words(); }

   private:
    std::size_t n_;
    boost::container::small_vector<std::uint64_t, 4> words_;
};

struct PauliStringHash {
    std::size_t operator()(const PauliString &p) const { return p.hash(); }
};

/// `i^phase * string`, phase in [0, 4).
struct PhasedString {
    int phase = 0;
    PauliString string;
};

/// Commutator `[a, b] = i * coefficient * string` with real nonzero coefficient.
struct Bracket {
    double coefficient = 0;
    PauliString string;
};

/// Exact product `a * b = i^phase * r`.
PhasedString multiply(const PauliString &a, const PauliString &b);

/// Product normalized to its proportional phase-free string (the box-dot product).
PauliString product_normalized(const PauliString &a, const PauliString &b);

bool commutes(const PauliString &a, const PauliString &b);

/// Full commutator with coefficient; empty when `a` and `b` commute.
std::optional<Bracket> bracket(const PauliString &a, const PauliString &b);

/// Phase-free element proportional to `[a, b]`; empty when they commute.
std::optional<PauliString> bracket_normalized(const PauliString &a, const PauliString &b);

/// Parses one product term such as "Z1 Y2", "x3*z4" or "I". Throws ParseError.
PauliString parse_pauli_string(std::string_view text, std::size_t num_qubits);

}  // namespace paccess

template <>
struct std::hash<paccess::PauliString> {
    std::size_t operator()(const paccess::PauliString &p) const { return p.hash(); }
};

#endif
