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

#ifndef S17_REGISTER_STATE_H
#define S17_REGISTER_STATE_H

#include <vector>

#include "s17/channel.h"
#include "s17/rng.h"

namespace s17 {

// Register conventions shared by DensityMatrix and StateVector:
//  - tensor slot k is bit k of the basis index;
//  - qubit_labels[k] is the code-qubit label held by slot k;
//  - a multi-qubit operator on labels (l0, l1, ...) uses kron order, so l0 is the most significant
//    bit of the operator's local index;
//  - append_qubit puts the new qubit in the most significant slot.

/// Pure register state.
class StateVector {
   public:
    StateVector() : amplitudes_{Complex{1.0, 0.0}} {
    }
    /// |0...0> on the given labels.
    static StateVector zeros(const std::vector<int> &labels);
    /// Amplitudes indexed by the slot convention above.
    static StateVector from_amplitudes(const ComplexVector &amplitudes, const std::vector<int> &labels);

    size_t n_qubits() const {
        return labels_.size();
    }
    size_t dim() const {
        return amplitudes_.size();
    }
    const std::vector<int> &qubit_labels() const {
        return labels_;
    }
    const std::vector<Complex> &amplitudes() const {
        return amplitudes_;
    }
    std::vector<Complex> &mutable_amplitudes() {
        return amplitudes_;
    }
    /// Slot holding a label; throws std::out_of_range if absent.
    int slot_of(int label) const;
    bool has_label(int label) const;

    double norm2() const;
    void normalize();

    void append_qubit(int label, Complex amp0 = 1.0, Complex amp1 = 0.0);
    /// Applies an arbitrary (not necessarily unitary) 2^k x 2^k operator on the labels.
    void apply_operator(const ComplexMatrix &op, const std::vector<int> &labels);
    /// Projects the qubit onto |bit> and removes it. The result is not renormalized; the return
    /// value is the squared norm of what is kept.
    double project_out(int label, int bit);
    /// Probability of reading 1 on the qubit, relative to the current squared norm.
    double probability_one(int label) const;
    /// Reduced density matrix on the labels (kron order), unnormalized.
    ComplexMatrix reduced_density_matrix(const std::vector<int> &labels) const;

    ComplexVector to_vector() const;

   private:
    std::vector<int> slots_for(const std::vector<int> &labels) const;

    std::vector<int> labels_;
    std::vector<Complex> amplitudes_;
};

/// Mixed register state, stored row major: entry (r, c) at r * dim + c.
class DensityMatrix {
   public:
    DensityMatrix() : entries_{Complex{1.0, 0.0}} {
    }
    static DensityMatrix zeros(const std::vector<int> &labels);
    static DensityMatrix from_matrix(const ComplexMatrix &rho, const std::vector<int> &labels);
    static DensityMatrix from_state(const StateVector &psi);

    size_t n_qubits() const {
        return labels_.size();
    }
    size_t dim() const {
        return size_t{1} << labels_.size();
    }
    const std::vector<int> &qubit_labels() const {
        return labels_;
    }
    const std::vector<Complex> &entries() const {
        return entries_;
    }
    int slot_of(int label) const;
    bool has_label(int label) const;

    Complex trace() const;
    void scale(double factor);

    /// Appends a qubit in the single-qubit state rho1 (2x2).
    void append_qubit(int label, const ComplexMatrix &rho1);
    /// rho -> U rho U^dagger.
    void apply_unitary(const ComplexMatrix &u, const std::vector<int> &labels);
    /// Applies a column-stacking superoperator of size 4^k x 4^k on k labels.
    void apply_superoperator(const ComplexMatrix &s, const std::vector<int> &labels);
    /// rho -> P rho P^dagger with P = |bit><bit| on the qubit, then the qubit is removed.
    /// Returns the trace of what is kept.
    double project_out(int label, int bit);
    /// Partial trace over one qubit.
    void trace_out(int label);

    ComplexMatrix to_matrix() const;

   private:
    std::vector<int> slots_for(const std::vector<int> &labels) const;

    std::vector<int> labels_;
    std::vector<Complex> entries_;
};

/// rho <- sum_j K_j rho K_j^dagger on the target labels, without building register-sized Kraus
/// matrices. Rank-1 channels take the unitary path; others go through the superoperator.
void apply_channel(DensityMatrix &rho, const KrausChannel &ch, const std::vector<int> &targets);

/// Samples Kraus branch j with probability ||K_j psi||^2 and replaces psi by the normalized branch.
/// Returns j. Throws std::runtime_error when every branch norm is below 1e-14.
size_t trajectory_step(StateVector &psi, const KrausChannel &ch, const std::vector<int> &targets, PhiloxStream &rng);

namespace kernels {

/// Applies a 2^k x 2^k matrix to the bits (most significant first) of a flat amplitude buffer of
/// size 2^n_bits. Used for both state vectors and, through the doubled-index view, density matrices.
void apply_matrix(Complex *data, size_t n_bits, const std::vector<int> &bits, const ComplexMatrix &m);

}  // namespace kernels

}  // namespace s17

#endif
