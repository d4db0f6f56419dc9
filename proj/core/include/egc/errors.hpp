// Copyright 2026 The egc Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace egc {

/// Operands act on different qubit counts.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An enumeration or analysis would exceed its configured size cap.
struct ResourceError : std::length_error {
    using std::length_error::length_error;
};

/// A graph or code could not be built from the given inputs.
struct ConstructionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input outside the valid numeric range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Malformed or incomplete configuration / input file.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Emitter sequence does not reproduce the target state.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace egc
