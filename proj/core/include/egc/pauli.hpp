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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace egc {

enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);

/// An n-qubit Pauli operator i^phase * P_0 (x) ... (x) P_{n-1}, stored in
/// symplectic form. Qubit q carries X iff (x,z) = (1,0), Z iff (0,1) and Y
/// iff (1,1); the Y convention is the Hermitian Y, so a Hermitian operator
/// always has phase 0 or 2.
///
/// The phase is kept mod 4 so that products of anticommuting operators are
/// exact, but everything built on top (stabilizer groups, logical sets)
/// only ever holds Hermitian operators and `sign()` refuses to answer for
/// anything else.
class PauliOperator {
  public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t num_qubits);

    /// Parses "+XIZY", "-X I Z", "iXY", "-iZ", "_" as identity. A missing
    /// sign means +1.
    static PauliOperator from_string(std::string_view text);
    static PauliOperator single(std::size_t num_qubits, std::size_t qubit, Pauli p);
    static PauliOperator from_masks(std::size_t num_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
                                    int sign = +1);

    std::size_t num_qubits() const { return num_qubits_; }

    bool x(std::size_t q) const;
    bool z(std::size_t q) const;
    Pauli at(std::size_t q) const;
    void set(std::size_t q, Pauli p);

    /// Exponent k of the global factor i^k.
    int phase() const { return phase_; }
    bool is_hermitian() const { return (phase_ & 1) == 0; }
    /// +1 or -1. Throws std::domain_error when the phase is +-i.
    int sign() const;
    void set_sign(int sign);
    PauliOperator negated() const;

    bool is_identity() const;  // ignores the phase
    std::size_t weight() const;
    std::vector<std::size_t> support() const;

    /// Bit masks over qubits; only valid for num_qubits() <= 64.
    std::uint64_t x_mask() const;
    std::uint64_t z_mask() const;

    std::span<const std::uint64_t> x_words() const { return x_; }
    std::span<const std::uint64_t> z_words() const { return z_; }

    /// Same Pauli letters, ignoring the phase.
    bool same_letters(const PauliOperator& other) const;

    /// Copy restricted to the listed qubits, in the order given.
    PauliOperator restricted(std::span<const std::size_t> qubits) const;

    /// Renders as "+XIYZ" (or "+iXY" for non-Hermitian phases).
    std::string str() const;

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
    friend bool operator<(const PauliOperator& a, const PauliOperator& b);

    // In-place right multiplication: *this <- (*this) * rhs.
    PauliOperator& operator*=(const PauliOperator& rhs);

  private:
    std::size_t num_qubits_ = 0;
    std::vector<std::uint64_t> x_;
    std::vector<std::uint64_t> z_;
    std::uint8_t phase_ = 0;

    friend class StabilizerState;
};

/// Product a*b with exact phase. Throws DimensionError on size mismatch.
PauliOperator multiply(const PauliOperator& a, const PauliOperator& b);
PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);

/// True iff the symplectic inner product of a and b is even.
bool commutes(const PauliOperator& a, const PauliOperator& b);

/// Per-qubit record of which joint parities were recovered: bit q of
/// `x_available` means the X-type parity on qubit q is known, likewise for Z.
struct AvailableParities {
    std::vector<bool> x_available;
    std::vector<bool> z_available;

    static AvailableParities none(std::size_t num_qubits);
    static AvailableParities all(std::size_t num_qubits);
    std::size_t num_qubits() const { return x_available.size(); }
};

/// True iff every non-identity factor of `a` can be rebuilt from the
/// available parities: X needs x, Z needs z, Y needs both.
bool qubitwise_commutes(const PauliOperator& a, const AvailableParities& measured);

/// An abelian group of Hermitian Paulis given by independent generators.
class StabilizerGroup {
  public:
    static constexpr std::size_t kDefaultEnumerationCap = 20;

    explicit StabilizerGroup(std::size_t num_qubits) : num_qubits_(num_qubits) {}
    /// Validates that every generator is Hermitian, that they pairwise
    /// commute and that they are independent. Throws ConstructionError.
    StabilizerGroup(std::size_t num_qubits, std::vector<PauliOperator> generators);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t order() const { return generators_.size(); }
    const std::vector<PauliOperator>& generators() const { return generators_; }

    /// All 2^k products. Element j is the product of generators whose bit is
    /// set in j, multiplied in increasing generator order.
    std::vector<PauliOperator> enumerate(std::size_t cap = kDefaultEnumerationCap) const;

  private:
    std::size_t num_qubits_ = 0;
    std::vector<PauliOperator> generators_;
};

std::vector<PauliOperator> enumerate_group(const StabilizerGroup& group,
                                           std::size_t cap = StabilizerGroup::kDefaultEnumerationCap);

/// Rank over GF(2) of the symplectic vectors of `ops` (phases ignored).
std::size_t symplectic_rank(std::span<const PauliOperator> ops);

}  // namespace egc
