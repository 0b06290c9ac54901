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

#ifndef OPMAGIC_PAULI_STRING_H
#define OPMAGIC_PAULI_STRING_H

#include <compare>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace opmagic {

/// Largest register a PauliString can describe (one machine word per mask).
constexpr size_t MAX_QUBITS = 64;

/// Largest register `enumerate_paulis` will expand (4^8 = 65536 strings).
constexpr size_t MAX_ENUMERATION_QUBITS = 8;

enum class PauliAxis : uint8_t { X, Y, Z };

/// A Hermitian N-qubit Pauli string stored in symplectic form.
///
/// Bit i of (x_mask, z_mask) encodes the letter on site i:
/// (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y. The represented matrix is always the
/// Hermitian tensor product of single-qubit Paulis, so Y is the usual Pauli Y
/// and no phase is stored with the string.
///
/// Strings are totally ordered by (z_mask, x_mask) compared as unsigned
/// integers. That order is the canonical order used for enumeration,
/// serialization and tie-breaking.
class PauliString {
   public:
    /// Identity on `num_qubits` qubits.
    explicit PauliString(size_t num_qubits);
    PauliString(size_t num_qubits, uint64_t x_mask, uint64_t z_mask);

    /// Identity everywhere except `axis` at `site`.
    static PauliString single_site(size_t num_qubits, size_t site, PauliAxis axis);

    /// Parses a dense letter string such as "XIZY" (site 0 first). No sign.
    static PauliString from_letters(std::string_view letters);

    size_t num_qubits() const { return num_qubits_; }
    uint64_t x_mask() const { return x_; }
    uint64_t z_mask() const { return z_; }

    /// One of 'I', 'X', 'Y', 'Z'.
    char letter(size_t site) const;
    bool is_identity() const { return (x_ | z_) == 0; }
    size_t weight() const;
    std::string str() const;

    bool operator==(const PauliString &other) const = default;
    std::strong_ordering operator<=>(const PauliString &other) const;

   private:
    uint32_t num_qubits_;
    uint64_t x_;
    uint64_t z_;
};

/// Result of multiplying two Hermitian Pauli strings: p * q = i^phase_exponent * result.
struct PauliProduct {
    uint8_t phase_exponent;
    PauliString result;

    std::complex<double> phase() const;
};

/// Matrix product of two Pauli strings. Throws std::invalid_argument on size mismatch.
PauliProduct pauli_mul(const PauliString &p, const PauliString &q);

/// True iff pq = qp. Throws std::invalid_argument on size mismatch.
bool commutes(const PauliString &p, const PauliString &q);

/// All 4^n strings in canonical order; n = 1 gives I, X, Z, Y.
/// Throws std::invalid_argument for n > MAX_ENUMERATION_QUBITS.
std::vector<PauliString> enumerate_paulis(size_t num_qubits);

/// Position of `p` within `enumerate_paulis(p.num_qubits())`.
size_t canonical_index(const PauliString &p);

/// Inverse of `canonical_index`.
PauliString pauli_from_index(size_t num_qubits, size_t index);

}  // namespace opmagic

template <>
struct std::hash<opmagic::PauliString> {
    size_t operator()(const opmagic::PauliString &p) const noexcept;
};

#endif
