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

#ifndef S17_CHANNEL_H
#define S17_CHANNEL_H

#include <vector>

#include "s17/linalg.h"

namespace s17 {

// Superoperators act on column-stacked density matrices: vec(rho)[i + d*j] = rho(i, j), so
// vec(A rho B) = (B^T kron A) vec(rho). Every superoperator in this library uses that layout.

/// Superoperator of rho -> a rho b.
ComplexMatrix superoperator_of(const ComplexMatrix &a, const ComplexMatrix &b);
/// Superoperator of rho -> u rho u^dagger.
ComplexMatrix superoperator_of(const ComplexMatrix &u);

ComplexVector vectorize(const ComplexMatrix &rho);
ComplexMatrix unvectorize(const ComplexVector &v, Eigen::Index dim);

/// Choi matrix sum_ij |i><j| kron S(|i><j|) of a superoperator.
ComplexMatrix choi_from_superoperator(const ComplexMatrix &s);

/// A quantum operation rho -> sum_j K_j rho K_j^dagger.
///
/// Construction checks trace preservation (sum K^dagger K = I within 1e-8) and throws
/// std::invalid_argument otherwise. Instances are immutable.
class KrausChannel {
   public:
    explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops, double cp_defect = 0.0);

    static KrausChannel identity(size_t dim);
    static KrausChannel unitary(const ComplexMatrix &u);

    size_t dim() const {
        return dim_;
    }
    size_t rank() const {
        return kraus_ops_.size();
    }
    bool is_unitary() const {
        return kraus_ops_.size() == 1;
    }
    const std::vector<ComplexMatrix> &kraus_ops() const {
        return kraus_ops_;
    }
    /// Magnitude of the most negative Choi eigenvalue that was clipped when the channel was built
    /// from a superoperator (0 for channels built directly from Kraus operators).
    double cp_defect() const {
        return cp_defect_;
    }

    ComplexMatrix superoperator() const;
    ComplexMatrix choi() const;
    ComplexMatrix apply(const ComplexMatrix &rho) const;

    /// The channel that applies *this first and then `next`.
    KrausChannel then(const KrausChannel &next) const;

   private:
    size_t dim_;
    std::vector<ComplexMatrix> kraus_ops_;
    double cp_defect_;
};

/// max |sum K^dagger K - I|.
double trace_preservation_defect(const std::vector<ComplexMatrix> &kraus_ops);

/// Converts a column-stacking superoperator into Kraus form through the Choi eigendecomposition.
///
/// Choi eigenvalues in [-cp_tolerance, 0) are treated as numerical noise: they are dropped and the
/// largest such magnitude is stored as cp_defect. A more negative eigenvalue means the map is not
/// completely positive and raises std::domain_error naming it. Trace preservation is re-checked after
/// clipping (defect above 1e-6 raises std::domain_error). Kraus operators with eigenvalue below
/// 1e-14 relative to the largest are omitted, so unitary maps come back with rank 1.
KrausChannel kraus_from_superoperator(const ComplexMatrix &s, double cp_tolerance = 1e-8);

}  // namespace s17

#endif
