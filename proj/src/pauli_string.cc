// Copyright 2026 The s17bench Authors
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

#include "s17/pauli_string.h"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace s17 {

PauliString::PauliString(size_t n_qubits) : n(n_qubits) {
    if (n_qubits > 64) {
        throw std::invalid_argument("PauliString supports at most 64 qubits");
    }
}

PauliString PauliString::from_terms(size_t n_qubits, const std::vector<std::pair<int, char>> &terms) {
    PauliString p(n_qubits);
    for (auto [q, c] : terms) {
        if (p.at(q) != 'I') {
            throw std::invalid_argument("PauliString::from_terms: qubit listed twice");
        }
        p.set(q, c);
    }
    return p;
}

char PauliString::at(int qubit) const {
    if (qubit < 0 || (size_t)qubit >= n) {
        throw std::out_of_range("PauliString: qubit out of range");
    }
    bool bx = (x >> qubit) & 1;
    bool bz = (z >> qubit) & 1;
    return bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
}

void PauliString::set(int qubit, char pauli) {
    if (qubit < 0 || (size_t)qubit >= n) {
        throw std::out_of_range("PauliString: qubit out of range");
    }
    uint64_t m = uint64_t{1} << qubit;
    x &= ~m;
    z &= ~m;
    switch (pauli) {
        case 'I':
            break;
        case 'X':
            x |= m;
            break;
        case 'Z':
            z |= m;
            break;
        case 'Y':
            x |= m;
            z |= m;
            break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli '") + pauli + "'");
    }
}

size_t PauliString::weight() const {
    return (size_t)std::popcount(x | z);
}

PauliString PauliString::operator*(const PauliString &other) const {
    if (n != other.n) {
        throw std::invalid_argument("PauliString product: size mismatch");
    }
    // Per-qubit phase exponents of sigma_a sigma_b (Aaronson-Gottesman g function).
    int exponent = phase + other.phase;
    for (size_t q = 0; q < n; q++) {
        int x1 = (x >> q) & 1, z1 = (z >> q) & 1;
        int x2 = (other.x >> q) & 1, z2 = (other.z >> q) & 1;
        if (x1 && z1) {
            exponent += z2 - x2;
        } else if (x1) {
            exponent += z2 * (2 * x2 - 1);
        } else if (z1) {
            exponent += x2 * (1 - 2 * z2);
        }
    }
    PauliString out(n);
    out.x = x ^ other.x;
    out.z = z ^ other.z;
    out.phase = (uint8_t)(((exponent % 4) + 4) % 4);
    return out;
}

std::string PauliString::str() const {
    static const char *signs[] = {"+", "+i", "-", "-i"};
    std::stringstream ss;
    ss << signs[phase];
    bool first = true;
    for (size_t q = 0; q < n; q++) {
        char c = at((int)q);
        if (c == 'I') {
            continue;
        }
        if (!first) {
            ss << '*';
        }
        ss << c << q;
        first = false;
    }
    if (first) {
        ss << 'I';
    }
    return ss.str();
}

bool commutes(const PauliString &p, const PauliString &q) {
    if (p.n != q.n) {
        throw std::invalid_argument("commutes: size mismatch");
    }
    return ((std::popcount(p.x & q.z) + std::popcount(p.z & q.x)) & 1) == 0;
}

}  // namespace s17
