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

#include "s17/noise.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace s17 {

KrausChannel noise_channel(NoiseKind kind) {
    double p = kind.p;
    if (!(p >= 0.0 && p <= 1.0)) {
        std::stringstream ss;
        ss << noise_name(kind.tag) << " probability must lie in [0, 1], got " << p;
        throw std::invalid_argument(ss.str());
    }
    ComplexMatrix id = gates::identity(2);
    switch (kind.tag) {
        case NoiseKind::bit_flip:
            return KrausChannel({std::sqrt(1 - p) * id, std::sqrt(p) * gates::pauli_x()});
        case NoiseKind::phase_flip:
            return KrausChannel({std::sqrt(1 - p) * id, std::sqrt(p) * gates::pauli_z()});
        case NoiseKind::depolarizing: {
            double q = std::sqrt(p / 4);
            return KrausChannel({std::sqrt(1 - 3 * p / 4) * id, q * gates::pauli_x(), q * gates::pauli_y(),
                                 q * gates::pauli_z()});
        }
    }
    throw std::invalid_argument("unknown noise kind");
}

std::string noise_name(NoiseKind::Tag tag) {
    switch (tag) {
        case NoiseKind::bit_flip:
            return "bit_flip";
        case NoiseKind::phase_flip:
            return "phase_flip";
        case NoiseKind::depolarizing:
            return "depolarizing";
    }
    return "unknown";
}

}  // namespace s17
