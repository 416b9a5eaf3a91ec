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

#ifndef S17_NOISE_H
#define S17_NOISE_H

#include <string>

#include "s17/channel.h"

namespace s17 {

struct NoiseKind {
    enum Tag { bit_flip, phase_flip, depolarizing };
    Tag tag;
    double p;
};

/// bit_flip: {sqrt(1-p) I, sqrt(p) X}; phase_flip: {sqrt(1-p) I, sqrt(p) Z};
/// depolarizing: {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}, i.e. rho -> (1-p) rho + p I/2.
/// Throws std::invalid_argument for p outside [0, 1].
KrausChannel noise_channel(NoiseKind kind);

std::string noise_name(NoiseKind::Tag tag);

}  // namespace s17

#endif
