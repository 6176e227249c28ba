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

#include "paccess/pauli_string.h"

#include <bit>

#include "paccess/errors.h"

namespace paccess {

namespace {

void require_same_width(const PauliString &a, const PauliString &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError(
            "Pauli strings act on different qubit counts (" + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()) + ")");
    }
}

// Sum over sites of the single-site product phase exponent, mod 4.
// Cyclic pairs XY, YZ, ZX contribute +1; anti-cyclic pairs contribute -1.
int product_phase(const PauliString &a, const PauliString &b) {
    auto ax = a.x_words(), az = a.z_words();
    auto bx = b.x_words(), bz = b.z_words();
    int total = 0;
    for (std::size_t w = 0; w < ax.size(); ++w) {
        std::uint64_t a_x = ax[w] & ~az[w], a_y = ax[w] & az[w], a_z = ~ax[w] & az[w];
        std::uint64_t b_x = bx[w] & ~bz[w], b_y = bx[w] & bz[w], b_z = ~bx[w] & bz[w];
        std::uint64_t pos = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
        std::uint64_t neg = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
        total += std::popcount(pos) - std::popcount(neg);
    }
    return ((total % 4) + 4) % 4;
}

PauliString xor_strings(const PauliString &a, const PauliString &b) {
    PauliString r = a;
    auto bx = b.x_words(), bz = b.z_words();
    std::uint64_t *rx = r.x_data();
    std::uint64_t *rz = r.z_data();
    for (std::size_t w = 0; w < bx.size(); ++w) {
        rx[w] ^= bx[w];
        rz[w] ^= bz[w];
    }
    return r;
}

}  // namespace

char cell_char(Cell c) {
    static constexpr char chars[] = {'I', 'X', 'Y', 'Z'};
    return chars[static_cast<int>(c)];
}

PauliString::PauliString(std::size_t num_qubits) : n_(num_qubits) {
    if (num_qubits == 0) {
        throw InputError("a Pauli string needs at least one qubit");
    }
    words_.assign(2 * ((num_qubits + 63) / 64), 0);
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t site, Cell c) {
    PauliString p(num_qubits);
    p.set(site, c);
    return p;
}

Cell PauliString::cell(std::size_t site) const {
    if (site >= n_) {
        throw InputError("site " + std::to_string(site + 1) + " out of range for " + std::to_string(n_) + " qubits");
    }
    bool x = (words_[site / 64] >> (site % 64)) & 1;
    bool z = (words_[num_words() + site / 64] >> (site % 64)) & 1;
    if (x) {
        return z ? Cell::Y : Cell::X;
    }
    return z ? Cell::Z : Cell::I;
}

void PauliString::set(std::size_t site, Cell c) {
    if (site >= n_) {
        throw InputError("site " + std::to_string(site + 1) + " out of range for " + std::to_string(n_) + " qubits");
    }
    std::uint64_t bit = std::uint64_t{1} << (site % 64);
    std::uint64_t &x = words_[site / 64];
    std::uint64_t &z = words_[num_words() + site / 64];
    bool want_x = c == Cell::X || c == Cell::Y;
    bool want_z = c == Cell::Z || c == Cell::Y;
    x = want_x ? (x | bit) : (x & ~bit);
    z = want_z ? (z | bit) : (z & ~bit);
}

bool PauliString::is_identity() const {
    for (auto w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

std::size_t PauliString::weight() const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < num_words(); ++w) {
        total += std::popcount(words_[w] | words_[num_words() + w]);
    }
    return total;
}

std::optional<std::size_t> PauliString::highest_site() const {
    for (std::size_t w = num_words(); w-- > 0;) {
        std::uint64_t support = words_[w] | words_[num_words() + w];
        if (support) {
            return w * 64 + (63 - std::countl_zero(support));
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> PauliString::lowest_site() const {
    for (std::size_t w = 0; w < num_words(); ++w) {
        std::uint64_t support = words_[w] | words_[num_words() + w];
        if (support) {
            return w * 64 + std::countr_zero(support);
        }
    }
    return std::nullopt;
}

bool PauliString::supported_below(std::size_t limit) const {
    auto top = highest_site();
    return !top || *top < limit;
}

std::string PauliString::str() const {
    std::string out;
    for (std::size_t j = 0; j < n_; ++j) {
        Cell c = cell(j);
        if (c == Cell::I) {
            continue;
        }
        if (!out.empty()) {
            out += ' ';
        }
        out += cell_char(c);
        out += std::to_string(j + 1);
    }
    return out.empty() ? "I" : out;
}

std::size_t PauliString::hash() const {
    // splitmix-style mixing over the words.
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ n_;
    for (auto w : words_) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h ^= h >> 31;
        h *= 0xBF58476D1CE4E5B9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

std::strong_ordering PauliString::operator<=>(const PauliString &other) const {
    if (n_ != other.n_) {
        return n_ <=> other.n_;
    }
    std::size_t nw = num_words();
    for (std::size_t w = 0; w < nw; ++w) {
        std::uint64_t diff = (words_[w] ^ other.words_[w]) | (words_[nw + w] ^ other.words_[nw + w]);
        if (diff) {
            std::size_t site = w * 64 + std::countr_zero(diff);
            return static_cast<int>(cell(site)) <=> static_cast<int>(other.cell(site));
        }
    }
    return std::strong_ordering::equal;
}

PhasedString multiply(const PauliString &a, const PauliString &b) {
    require_same_width(a, b);
    return {product_phase(a, b), xor_strings(a, b)};
}

PauliString product_normalized(const PauliString &a, const PauliString &b) {
    require_same_width(a, b);
    return xor_strings(a, b);
}

bool commutes(const PauliString &a, const PauliString &b) {
    require_same_width(a, b);
    auto ax = a.x_words(), az = a.z_words();
    auto bx = b.x_words(), bz = b.z_words();
    std::uint64_t parity = 0;
    for (std::size_t w = 0; w < ax.size(); ++w) {
        parity ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
    }
    return (std::popcount(parity) & 1) == 0;
}

std::optional<Bracket> bracket(const PauliString &a, const PauliString &b) {
    if (commutes(a, b)) {
        return std::nullopt;
    }
    // Anticommuting: [a, b] = 2ab = 2 i^phase r with odd phase, i.e. i * (+-2) * r.
    PhasedString ab = multiply(a, b);
    return Bracket{ab.phase == 1 ? 2.0 : -2.0, std::move(ab.string)};
}

std::optional<PauliString> bracket_normalized(const PauliString &a, const PauliString &b) {
    if (commutes(a, b)) {
        return std::nullopt;
    }
    return xor_strings(a, b);
}

}  // namespace paccess
