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

#ifndef PACCESS_ERRORS_H
#define PACCESS_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paccess {

/// Operands disagree on qubit count, or a matrix has the wrong shape.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Caller supplied a value outside an operation's domain.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed operator text. `position` is a 0-based byte offset into the input.
struct ParseError : InputError {
    ParseError(const std::string &msg, std::size_t pos)
        : InputError(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

/// A structural guarantee was violated (non-fixpoint set, bracket landing outside
/// the set, imaginary model entries, ...).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The stepping integrator diverged.
struct InstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace paccess

#endif
