// Copyright 2026 The opmagic Authors
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

#include "opmagic/pauli_string.h"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace opmagic {

namespace {

uint64_t low_mask(size_t n) {
    return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

void check_same_size(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        std::stringstream ss;
        ss << "Pauli string size mismatch: " << p.num_qubits() << " vs " << q.num_qubits() << ".";
        throw std::invalid_argument(ss.str());
    }
}

}  // namespace

PauliString::PauliString(size_t num_qubits) : PauliString(num_qubits, 0, 0) {
}

PauliString::PauliString(size_t num_qubits, uint64_t x_mask, uint64_t z_mask)
    : num_qubits_(static_cast<uint32_t>(num_qubits)), x_(x_mask), z_(z_mask) {
    if (num_qubits == 0 || num_qubits > MAX_QUBITS) {
        std::stringstream ss;
        ss << "Pauli string needs 1.." << MAX_QUBITS << " qubits, got " << num_qubits << ".";
        throw std::invalid_argument(ss.str());
    }
    uint64_t outside = ~low_mask(num_qubits);
    if ((x_mask | z_mask) & outside) {
        throw std::invalid_argument("Pauli string masks have bits beyond the qubit count.");
    }
}

PauliString PauliString::single_site(size_t num_qubits, size_t site, PauliAxis axis) {
    if (site >= num_qubits) {
        std::stringstream ss;
        ss << "Site " << site << " out of range for " << num_qubits << " qubits.";
        throw std::out_of_range(ss.str());
    }
    uint64_t bit = uint64_t{1} << site;
    switch (axis) {
        case PauliAxis::X:
            return PauliString(num_qubits, bit, 0);
        case PauliAxis::Y:
            return PauliString(num_qubits, bit, bit);
        case PauliAxis::Z:
            return PauliString(num_qubits, 0, bit);
    }
    throw std::invalid_argument("Unknown Pauli axis.");
}

PauliString PauliString::from_letters(std::string_view letters) {
    uint64_t x = 0;
    uint64_t z = 0;
    if (letters.size() > MAX_QUBITS) {
        throw std::invalid_argument("Pauli string too long.");
    }
    for (size_t k = 0; k < letters.size(); k++) {
        uint64_t bit = uint64_t{1} << k;
        switch (letters[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default: {
                std::stringstream ss;
                ss << "Unrecognized Pauli letter '" << letters[k] << "' in \"" << letters << "\".";
                throw std::invalid_argument(ss.str());
            }
        }
    }
    return PauliString(letters.size(), x, z);
}

char PauliString::letter(size_t site) const {
    if (site >= num_qubits_) {
        throw std::out_of_range("Pauli letter site out of range.");
    }
    bool xb = (x_ >> site) & 1;
    bool zb = (z_ >> site) & 1;
    return "IXZY"[xb + 2 * zb];
}

size_t PauliString::weight() const {
    return static_cast<size_t>(std::popcount(x_ | z_));
}

std::string PauliString::str() const {
    std::string out(num_qubits_, 'I');
    for (size_t k = 0; k < num_qubits_; k++) {
        out[k] = letter(k);
    }
    return out;
}

std::strong_ordering PauliString::operator<=>(const PauliString &other) const {
    if (auto c = num_qubits_ <=> other.num_qubits_; c != 0) {
        return c;
    }
    if (auto c = z_ <=> other.z_; c != 0) {
        return c;
    }
    return x_ <=> other.x_;
}

std::complex<double> PauliProduct::phase() const {
    constexpr std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[phase_exponent & 3];
}

PauliProduct pauli_mul(const PauliString &p, const PauliString &q) {
    check_same_size(p, q);
    // Each Hermitian string is i^{|x&z|} X^x Z^z. Moving Z^{z1} past X^{x2}
    // costs (-1)^{|z1&x2|}, and the product X^x Z^z is re-expressed with the
    // Hermitian phase of the result removed.
    uint64_t x = p.x_mask() ^ q.x_mask();
    uint64_t z = p.z_mask() ^ q.z_mask();
    int e = std::popcount(p.x_mask() & p.z_mask()) + std::popcount(q.x_mask() & q.z_mask()) +
            2 * std::popcount(p.z_mask() & q.x_mask()) - std::popcount(x & z);
    return PauliProduct{static_cast<uint8_t>(((e % 4) + 4) % 4), PauliString(p.num_qubits(), x, z)};
}

bool commutes(const PauliString &p, const PauliString &q) {
    check_same_size(p, q);
    uint64_t overlap = (p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask());
    return (std::popcount(overlap) & 1) == 0;
}

std::vector<PauliString> enumerate_paulis(size_t num_qubits) {
    if (num_qubits > MAX_ENUMERATION_QUBITS) {
        std::stringstream ss;
        ss << "Refusing to enumerate 4^" << num_qubits << " Pauli strings (limit is "
           << MAX_ENUMERATION_QUBITS << " qubits).";
        throw std::invalid_argument(ss.str());
    }
    size_t count = size_t{1} << (2 * num_qubits);
    std::vector<PauliString> out;
    out.reserve(count);
    for (size_t k = 0; k < count; k++) {
        out.push_back(pauli_from_index(num_qubits, k));
    }
    return out;
}

size_t canonical_index(const PauliString &p) {
    if (p.num_qubits() > 31) {
        throw std::invalid_argument("canonical_index only supports up to 31 qubits.");
    }
    return (static_cast<size_t>(p.z_mask()) << p.num_qubits()) | static_cast<size_t>(p.x_mask());
}

PauliString pauli_from_index(size_t num_qubits, size_t index) {
    if (num_qubits > 31 || (index >> (2 * num_qubits)) != 0) {
        throw std::out_of_range("Pauli index out of range.");
    }
    uint64_t mask = low_mask(num_qubits);
    return PauliString(num_qubits, index & mask, (index >> num_qubits) & mask);
}

}  // namespace opmagic

size_t std::hash<opmagic::PauliString>::operator()(const opmagic::PauliString &p) const noexcept {
    uint64_t h = p.x_mask() * 0x9E3779B97F4A7C15ULL;
    h ^= (p.z_mask() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    h ^= p.num_qubits();
    return static_cast<size_t>(h);
}
