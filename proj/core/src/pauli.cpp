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

#include "egc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "egc/errors.hpp"

namespace egc {

namespace {

std::size_t num_words(std::size_t n) { return (n + 63) / 64; }

void check_same_size(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError("Pauli operands act on " + std::to_string(a.num_qubits()) + " and " +
                             std::to_string(b.num_qubits()) + " qubits");
    }
}

}  // namespace

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

PauliOperator::PauliOperator(std::size_t num_qubits)
    : num_qubits_(num_qubits), x_(num_words(num_qubits), 0), z_(num_words(num_qubits), 0) {}

PauliOperator PauliOperator::from_string(std::string_view text) {
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    int phase = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        if (text[i] == '-') phase = 2;
        ++i;
    }
    if (i < text.size() && text[i] == 'i') {
        phase += 1;
        ++i;
    }
    std::vector<Pauli> letters;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        switch (c) {
            case 'I': case '_': letters.push_back(Pauli::I); break;
            case 'X': letters.push_back(Pauli::X); break;
            case 'Y': letters.push_back(Pauli::Y); break;
            case 'Z': letters.push_back(Pauli::Z); break;
            default:
                throw std::invalid_argument("bad character '" + std::string(1, c) + "' in Pauli string \"" +
                                            std::string(text) + "\"");
        }
    }
    PauliOperator out(letters.size());
    for (std::size_t q = 0; q < letters.size(); ++q) out.set(q, letters[q]);
    out.phase_ = static_cast<std::uint8_t>(phase & 3);
    return out;
}

PauliOperator PauliOperator::single(std::size_t num_qubits, std::size_t qubit, Pauli p) {
    PauliOperator out(num_qubits);
    out.set(qubit, p);
    return out;
}

PauliOperator PauliOperator::from_masks(std::size_t num_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
                                        int sign) {
    if (num_qubits > 64) throw DimensionError("from_masks supports at most 64 qubits");
    PauliOperator out(num_qubits);
    if (num_qubits > 0) {
        std::uint64_t keep = num_qubits == 64 ? ~0ULL : ((1ULL << num_qubits) - 1);
        out.x_[0] = x_mask & keep;
        out.z_[0] = z_mask & keep;
    }
    out.set_sign(sign);
    return out;
}

bool PauliOperator::x(std::size_t q) const { return (x_[q / 64] >> (q % 64)) & 1; }
bool PauliOperator::z(std::size_t q) const { return (z_[q / 64] >> (q % 64)) & 1; }

Pauli PauliOperator::at(std::size_t q) const {
    return static_cast<Pauli>((x(q) ? 1 : 0) | (z(q) ? 2 : 0));
}

void PauliOperator::set(std::size_t q, Pauli p) {
    if (q >= num_qubits_) throw std::out_of_range("qubit index out of range");
    std::uint64_t bit = 1ULL << (q % 64);
    auto v = static_cast<std::uint8_t>(p);
    if (v & 1) x_[q / 64] |= bit; else x_[q / 64] &= ~bit;
    if (v & 2) z_[q / 64] |= bit; else z_[q / 64] &= ~bit;
}

int PauliOperator::sign() const {
    if (!is_hermitian()) throw std::domain_error("Pauli operator " + str() + " has an imaginary phase");
    return phase_ == 0 ? +1 : -1;
}

void PauliOperator::set_sign(int sign) { phase_ = sign < 0 ? 2 : 0; }

PauliOperator PauliOperator::negated() const {
    PauliOperator out = *this;
    out.phase_ = static_cast<std::uint8_t>((phase_ + 2) & 3);
    return out;
}

bool PauliOperator::is_identity() const {
    for (std::size_t w = 0; w < x_.size(); ++w) {
        if (x_[w] | z_[w]) return false;
    }
    return true;
}

std::size_t PauliOperator::weight() const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < x_.size(); ++w) total += std::popcount(x_[w] | z_[w]);
    return total;
}

std::vector<std::size_t> PauliOperator::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        if (x(q) || z(q)) out.push_back(q);
    }
    return out;
}

std::uint64_t PauliOperator::x_mask() const {
    if (num_qubits_ > 64) throw DimensionError("x_mask needs at most 64 qubits");
    return x_.empty() ? 0 : x_[0];
}

std::uint64_t PauliOperator::z_mask() const {
    if (num_qubits_ > 64) throw DimensionError("z_mask needs at most 64 qubits");
    return z_.empty() ? 0 : z_[0];
}

bool PauliOperator::same_letters(const PauliOperator& other) const {
    return num_qubits_ == other.num_qubits_ && x_ == other.x_ && z_ == other.z_;
}

PauliOperator PauliOperator::restricted(std::span<const std::size_t> qubits) const {
    PauliOperator out(qubits.size());
    for (std::size_t k = 0; k < qubits.size(); ++k) out.set(k, at(qubits[k]));
    out.phase_ = phase_;
    return out;
}

std::string PauliOperator::str() const {
    std::string out;
    switch (phase_) {
        case 0: out = "+"; break;
        case 1: out = "+i"; break;
        case 2: out = "-"; break;
        default: out = "-i"; break;
    }
    for (std::size_t q = 0; q < num_qubits_; ++q) out.push_back(pauli_char(at(q)));
    return out;
}

bool operator<(const PauliOperator& a, const PauliOperator& b) {
    if (a.num_qubits_ != b.num_qubits_) return a.num_qubits_ < b.num_qubits_;
    if (a.x_ != b.x_) return a.x_ < b.x_;
    if (a.z_ != b.z_) return a.z_ < b.z_;
    return a.phase_ < b.phase_;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& rhs) {
    check_same_size(*this, rhs);
    // Phase bookkeeping: for each qubit, sigma_a sigma_b = i^g sigma_c with
    // g in {-1, 0, 1}. Count the +1 and -1 cases with word-level masks.
    int total = phase_ + rhs.phase_;
    for (std::size_t w = 0; w < x_.size(); ++w) {
        std::uint64_t x1 = x_[w], z1 = z_[w], x2 = rhs.x_[w], z2 = rhs.z_[w];
        std::uint64_t a_x = x1 & ~z1, a_y = x1 & z1, a_z = ~x1 & z1;
        std::uint64_t b_x = x2 & ~z2, b_y = x2 & z2, b_z = ~x2 & z2;
        // +i cases: XY, YZ, ZX. -i cases: YX, ZY, XZ.
        std::uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
        std::uint64_t minus = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
        total += std::popcount(plus) - std::popcount(minus);
        x_[w] = x1 ^ x2;
        z_[w] = z1 ^ z2;
    }
    phase_ = static_cast<std::uint8_t>(((total % 4) + 4) % 4);
    return *this;
}

PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
    PauliOperator out = a;
    out *= b;
    return out;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) { return multiply(a, b); }

bool commutes(const PauliOperator& a, const PauliOperator& b) {
    check_same_size(a, b);
    auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
    int parity = 0;
    for (std::size_t w = 0; w < ax.size(); ++w) {
        parity ^= std::popcount((ax[w] & bz[w]) ^ (az[w] & bx[w])) & 1;
    }
    return parity == 0;
}

AvailableParities AvailableParities::none(std::size_t num_qubits) {
    return {std::vector<bool>(num_qubits, false), std::vector<bool>(num_qubits, false)};
}

AvailableParities AvailableParities::all(std::size_t num_qubits) {
    return {std::vector<bool>(num_qubits, true), std::vector<bool>(num_qubits, true)};
}

bool qubitwise_commutes(const PauliOperator& a, const AvailableParities& measured) {
    if (a.num_qubits() != measured.num_qubits()) throw DimensionError("pattern and operator sizes differ");
    for (std::size_t q = 0; q < a.num_qubits(); ++q) {
        if (a.x(q) && !measured.x_available[q]) return false;
        if (a.z(q) && !measured.z_available[q]) return false;
    }
    return true;
}

std::size_t symplectic_rank(std::span<const PauliOperator> ops) {
    if (ops.empty()) return 0;
    std::size_t n = ops.front().num_qubits();
    std::vector<std::vector<bool>> rows;
    rows.reserve(ops.size());
    for (const auto& op : ops) {
        if (op.num_qubits() != n) throw DimensionError("operators differ in size");
        std::vector<bool> row(2 * n);
        for (std::size_t q = 0; q < n; ++q) {
            row[q] = op.x(q);
            row[n + q] = op.z(q);
        }
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && rows[r][col]) {
                for (std::size_t c = 0; c < 2 * n; ++c) rows[r][c] = rows[r][c] ^ rows[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

StabilizerGroup::StabilizerGroup(std::size_t num_qubits, std::vector<PauliOperator> generators)
    : num_qubits_(num_qubits), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
        if (g.num_qubits() != num_qubits_) throw DimensionError("generator size does not match group size");
        if (!g.is_hermitian()) throw ConstructionError("generator " + g.str() + " is not Hermitian");
    }
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (std::size_t j = i + 1; j < generators_.size(); ++j) {
            if (!commutes(generators_[i], generators_[j])) {
                throw ConstructionError("generators " + generators_[i].str() + " and " + generators_[j].str() +
                                        " anticommute");
            }
        }
    }
    if (symplectic_rank(generators_) != generators_.size()) {
        throw ConstructionError("stabilizer generators are not independent");
    }
}

std::vector<PauliOperator> StabilizerGroup::enumerate(std::size_t cap) const {
    std::size_t k = generators_.size();
    if (k > cap) {
        throw ResourceError("group with " + std::to_string(k) + " generators exceeds enumeration cap " +
                            std::to_string(cap));
    }
    std::vector<PauliOperator> out;
    out.reserve(std::size_t{1} << k);
    out.emplace_back(num_qubits_);
    // Element j = element (j without its top bit) * generator(top bit). Since
    // the generators commute, this equals the increasing-order product.
    for (std::size_t j = 1; j < (std::size_t{1} << k); ++j) {
        std::size_t top = std::bit_width(j) - 1;
        out.push_back(multiply(out[j ^ (std::size_t{1} << top)], generators_[top]));
    }
    return out;
}

std::vector<PauliOperator> enumerate_group(const StabilizerGroup& group, std::size_t cap) {
    return group.enumerate(cap);
}

}  // namespace egc
