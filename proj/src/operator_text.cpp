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

// Operator text grammar:
//
//   sum     := [sign] term (sign term)*
//   term    := [sign] [number ['*']] product | [sign] number
//   product := factor (('*' | whitespace)? factor)*
//   factor  := ('X' | 'Y' | 'Z') site | 'I' [site]
//
// Sites are 1-based, letters are case-insensitive, and a site may appear at
// most once per term.

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "paccess/errors.h"
#include "paccess/pauli_sum.h"

namespace paccess {

namespace {

class TermParser {
   public:
    TermParser(std::string_view text, std::size_t num_qubits) : s_(text), n_(num_qubits) {}

    std::vector<PauliTerm> parse_sum() {
        skip_ws();
        if (at_end()) {
            throw ParseError("empty operator text", pos_);
        }
        std::vector<PauliTerm> terms;
        double sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = take() == '-' ? -1 : 1;
        }
        while (true) {
            terms.push_back(parse_term(sign));
            skip_ws();
            if (at_end()) {
                break;
            }
            char c = peek();
            if (c != '+' && c != '-') {
                throw ParseError(std::string("expected '+' or '-' but found '") + c + "'", pos_);
            }
            take();
            sign = c == '-' ? -1 : 1;
        }
        return terms;
    }

    PauliString parse_single() {
        skip_ws();
        if (at_end()) {
            throw ParseError("empty operator text", pos_);
        }
        PauliString p = parse_product(true);
        skip_ws();
        if (!at_end()) {
            throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
        }
        return p;
    }

   private:
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char take() { return s_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }
    bool at_term_end() const { return at_end() || peek() == '+' || peek() == '-'; }

    PauliTerm parse_term(double sign) {
        skip_ws();
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            if (take() == '-') {
                sign = -sign;
            }
            skip_ws();
        }
        if (at_end()) {
            throw ParseError("expected a term", pos_);
        }
        double coefficient = 1;
        bool have_number = false;
        if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
            auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), coefficient);
            if (ec != std::errc()) {
                throw ParseError("malformed number", pos_);
            }
            if (!std::isfinite(coefficient)) {
                throw ParseError("non-finite coefficient", pos_);
            }
            pos_ = static_cast<std::size_t>(end - s_.data());
            have_number = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                take();
                skip_ws();
                if (at_term_end()) {
                    throw ParseError("expected an operator after '*'", pos_);
                }
            }
        }
        if (at_term_end()) {
            if (!have_number) {
                throw ParseError("expected a term", pos_);
            }
            return {sign * coefficient, PauliString(n_)};
        }
        return {sign * coefficient, parse_product(false)};
    }

    std::size_t parse_site(std::size_t factor_pos) {
        std::size_t start = pos_;
        std::size_t site = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            site = site * 10 + static_cast<std::size_t>(take() - '0');
            if (site > (std::size_t{1} << 40)) {
                throw ParseError("site index too large", start);
            }
        }
        if (pos_ == start) {
            throw ParseError("expected a site index", pos_);
        }
        if (site == 0 || site > n_) {
            throw ParseError(
                "site index " + std::to_string(site) + " out of range 1.." + std::to_string(n_), factor_pos);
        }
        return site - 1;
    }

    PauliString parse_product(bool whole_input) {
        PauliString p(n_);
        std::vector<bool> used(n_, false);
        bool any = false;
        while (!at_end() && (whole_input || !at_term_end())) {
            std::size_t factor_pos = pos_;
            char c = static_cast<char>(std::toupper(static_cast<unsigned char>(peek())));
            if (c == 'X' || c == 'Y' || c == 'Z') {
                take();
                std::size_t site = parse_site(factor_pos);
                if (used[site]) {
                    throw ParseError("site " + std::to_string(site + 1) + " repeated within a term", factor_pos);
                }
                used[site] = true;
                p.set(site, c == 'X' ? Cell::X : (c == 'Y' ? Cell::Y : Cell::Z));
            } else if (c == 'I') {
                take();
                if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                    parse_site(factor_pos);
                }
            } else {
                throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
            }
            any = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                take();
                skip_ws();
                if (at_end() || (!whole_input && at_term_end())) {
                    throw ParseError("expected an operator after '*'", pos_);
                }
            }
        }
        if (!any) {
            throw ParseError("expected an operator", pos_);
        }
        return p;
    }

    std::string_view s_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace

PauliString parse_pauli_string(std::string_view text, std::size_t num_qubits) {
    return TermParser(text, num_qubits).parse_single();
}

std::vector<PauliTerm> parse_terms(std::string_view text, std::size_t num_qubits) {
    if (num_qubits == 0) {
        throw InputError("operator text needs at least one qubit");
    }
    return TermParser(text, num_qubits).parse_sum();
}

std::string format_real(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

std::string format_terms(const std::vector<PauliTerm> &terms) {
    std::string out;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        double c = terms[k].coefficient;
        if (k == 0) {
            out += format_real(c);
        } else if (std::signbit(c)) {
            out += " - " + format_real(-c);
        } else {
            out += " + " + format_real(c);
        }
        out += " * " + terms[k].string.str();
    }
    return out;
}

}  // namespace paccess
