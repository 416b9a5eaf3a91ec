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

#include "s17/register_state.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace s17 {

namespace kernels {

namespace {

template <int K>
void apply_fixed(Complex *data, size_t n_bits, const std::vector<int> &bits, const ComplexMatrix &m) {
    constexpr int M = 1 << K;
    std::array<size_t, M> offsets{};
    for (int l = 0; l < M; l++) {
        size_t off = 0;
        for (int j = 0; j < K; j++) {
            if ((l >> (K - 1 - j)) & 1) {
                off |= size_t{1} << bits[j];
            }
        }
        offsets[l] = off;
    }
    std::array<int, K> sorted;
    std::copy(bits.begin(), bits.end(), sorted.begin());
    std::sort(sorted.begin(), sorted.end());
    std::array<Complex, M * M> mat;
    for (int r = 0; r < M; r++) {
        for (int c = 0; c < M; c++) {
            mat[r * M + c] = m(r, c);
        }
    }
    size_t n_outer = size_t{1} << (n_bits - K);
    std::array<Complex, M> in;
    for (size_t i = 0; i < n_outer; i++) {
        size_t base = i;
        for (int j = 0; j < K; j++) {
            size_t low = base & ((size_t{1} << sorted[j]) - 1);
            base = ((base ^ low) << 1) | low;
        }
        for (int l = 0; l < M; l++) {
            in[l] = data[base + offsets[l]];
        }
        for (int r = 0; r < M; r++) {
            Complex acc = 0;
            for (int c = 0; c < M; c++) {
                acc += mat[r * M + c] * in[c];
            }
            data[base + offsets[r]] = acc;
        }
    }
}

}  // namespace

void apply_matrix(Complex *data, size_t n_bits, const std::vector<int> &bits, const ComplexMatrix &m) {
    size_t k = bits.size();
    if (m.rows() != (Eigen::Index)(size_t{1} << k) || m.cols() != m.rows()) {
        throw std::invalid_argument("apply_matrix: operator size does not match target count");
    }
    for (size_t j = 0; j < k; j++) {
        if (bits[j] < 0 || (size_t)bits[j] >= n_bits) {
            throw std::out_of_range("apply_matrix: target out of range");
        }
        for (size_t i = 0; i < j; i++) {
            if (bits[i] == bits[j]) {
                throw std::invalid_argument("apply_matrix: repeated target");
            }
        }
    }
    switch (k) {
        case 0:
            for (size_t i = 0; i < (size_t{1} << n_bits); i++) {
                data[i] *= m(0, 0);
            }
            return;
        case 1:
            return apply_fixed<1>(data, n_bits, bits, m);
        case 2:
            return apply_fixed<2>(data, n_bits, bits, m);
        case 3:
            return apply_fixed<3>(data, n_bits, bits, m);
        case 4:
            return apply_fixed<4>(data, n_bits, bits, m);
        default:
            throw std::invalid_argument("apply_matrix: at most 4 target bits supported");
    }
}

}  // namespace kernels

namespace {

int find_slot(const std::vector<int> &labels, int label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        std::stringstream ss;
        ss << "qubit " << label << " is not in the register";
        throw std::out_of_range(ss.str());
    }
    return (int)(it - labels.begin());
}

std::vector<int> resolve_slots(const std::vector<int> &labels, const std::vector<int> &targets) {
    std::vector<int> slots;
    for (size_t j = 0; j < targets.size(); j++) {
        for (size_t i = 0; i < j; i++) {
            if (targets[i] == targets[j]) {
                std::stringstream ss;
                ss << "target collision on qubit " << targets[j];
                throw std::invalid_argument(ss.str());
            }
        }
        slots.push_back(find_slot(labels, targets[j]));
    }
    return slots;
}

void check_labels_unique(const std::vector<int> &labels) {
    for (size_t j = 0; j < labels.size(); j++) {
        for (size_t i = 0; i < j; i++) {
            if (labels[i] == labels[j]) {
                throw std::invalid_argument("duplicate qubit label");
            }
        }
    }
}

}  // namespace

StateVector StateVector::zeros(const std::vector<int> &labels) {
    StateVector out;
    for (int l : labels) {
        out.append_qubit(l);
    }
    return out;
}

StateVector StateVector::from_amplitudes(const ComplexVector &amplitudes, const std::vector<int> &labels) {
    check_labels_unique(labels);
    if ((size_t)amplitudes.size() != (size_t{1} << labels.size())) {
        throw std::invalid_argument("StateVector: amplitude count must be 2^n");
    }
    StateVector out;
    out.labels_ = labels;
    out.amplitudes_.assign(amplitudes.data(), amplitudes.data() + amplitudes.size());
    return out;
}

int StateVector::slot_of(int label) const {
    return find_slot(labels_, label);
}

bool StateVector::has_label(int label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::vector<int> StateVector::slots_for(const std::vector<int> &labels) const {
    return resolve_slots(labels_, labels);
}

double StateVector::norm2() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

void StateVector::normalize() {
    double n = norm2();
    if (!(n > 0)) {
        throw std::runtime_error("cannot normalize a zero state");
    }
    double s = 1.0 / std::sqrt(n);
    for (auto &a : amplitudes_) {
        a *= s;
    }
}

void StateVector::append_qubit(int label, Complex amp0, Complex amp1) {
    if (has_label(label)) {
        throw std::invalid_argument("append_qubit: label already present");
    }
    size_t d = amplitudes_.size();
    amplitudes_.resize(2 * d);
    for (size_t i = 0; i < d; i++) {
        amplitudes_[d + i] = amplitudes_[i] * amp1;
        amplitudes_[i] *= amp0;
    }
    labels_.push_back(label);
}

void StateVector::apply_operator(const ComplexMatrix &op, const std::vector<int> &labels) {
    kernels::apply_matrix(amplitudes_.data(), labels_.size(), slots_for(labels), op);
}

double StateVector::project_out(int label, int bit) {
    int s = slot_of(label);
    size_t low_mask = (size_t{1} << s) - 1;
    size_t half = amplitudes_.size() / 2;
    double kept = 0;
    for (size_t i = 0; i < half; i++) {
        size_t src = ((i & ~low_mask) << 1) | (i & low_mask) | ((size_t)bit << s);
        amplitudes_[i] = amplitudes_[src];
        kept += std::norm(amplitudes_[i]);
    }
    amplitudes_.resize(half);
    labels_.erase(labels_.begin() + s);
    return kept;
}

double StateVector::probability_one(int label) const {
    size_t mask = size_t{1} << slot_of(label);
    double one = 0, total = 0;
    for (size_t i = 0; i < amplitudes_.size(); i++) {
        double w = std::norm(amplitudes_[i]);
        total += w;
        if (i & mask) {
            one += w;
        }
    }
    return total > 0 ? one / total : 0.0;
}

ComplexMatrix StateVector::reduced_density_matrix(const std::vector<int> &labels) const {
    std::vector<int> slots = slots_for(labels);
    size_t k = slots.size();
    size_t m = size_t{1} << k;
    ComplexMatrix out = ComplexMatrix::Zero((Eigen::Index)m, (Eigen::Index)m);
    std::vector<size_t> offsets(m, 0);
    size_t target_mask = 0;
    for (size_t l = 0; l < m; l++) {
        for (size_t j = 0; j < k; j++) {
            if ((l >> (k - 1 - j)) & 1) {
                offsets[l] |= size_t{1} << slots[j];
            }
        }
    }
    for (int s : slots) {
        target_mask |= size_t{1} << s;
    }
    std::vector<Complex> local(m);
    for (size_t base = 0; base < amplitudes_.size(); base++) {
        if (base & target_mask) {
            continue;
        }
        for (size_t l = 0; l < m; l++) {
            local[l] = amplitudes_[base | offsets[l]];
        }
        for (size_t r = 0; r < m; r++) {
            for (size_t c = 0; c < m; c++) {
                out((Eigen::Index)r, (Eigen::Index)c) += local[r] * std::conj(local[c]);
            }
        }
    }
    return out;
}

ComplexVector StateVector::to_vector() const {
    return Eigen::Map<const ComplexVector>(amplitudes_.data(), (Eigen::Index)amplitudes_.size());
}

DensityMatrix DensityMatrix::zeros(const std::vector<int> &labels) {
    DensityMatrix out;
    ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
    zero(0, 0) = 1;
    for (int l : labels) {
        out.append_qubit(l, zero);
    }
    return out;
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix &rho, const std::vector<int> &labels) {
    check_labels_unique(labels);
    size_t d = size_t{1} << labels.size();
    if ((size_t)rho.rows() != d || (size_t)rho.cols() != d) {
        throw std::invalid_argument("DensityMatrix: matrix must be 2^n x 2^n");
    }
    DensityMatrix out;
    out.labels_ = labels;
    out.entries_.resize(d * d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            out.entries_[r * d + c] = rho((Eigen::Index)r, (Eigen::Index)c);
        }
    }
    return out;
}

DensityMatrix DensityMatrix::from_state(const StateVector &psi) {
    ComplexVector v = psi.to_vector();
    return from_matrix(v * v.adjoint(), psi.qubit_labels());
}

int DensityMatrix::slot_of(int label) const {
    return find_slot(labels_, label);
}

bool DensityMatrix::has_label(int label) const {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::vector<int> DensityMatrix::slots_for(const std::vector<int> &labels) const {
    return resolve_slots(labels_, labels);
}

Complex DensityMatrix::trace() const {
    size_t d = dim();
    Complex t = 0;
    for (size_t i = 0; i < d; i++) {
        t += entries_[i * d + i];
    }
    return t;
}

void DensityMatrix::scale(double factor) {
    for (auto &e : entries_) {
        e *= factor;
    }
}

void DensityMatrix::append_qubit(int label, const ComplexMatrix &rho1) {
    if (has_label(label)) {
        throw std::invalid_argument("append_qubit: label already present");
    }
    if (rho1.rows() != 2 || rho1.cols() != 2) {
        throw std::invalid_argument("append_qubit: single-qubit state must be 2x2");
    }
    size_t d = dim();
    size_t big = 2 * d;
    std::vector<Complex> out(big * big);
    for (size_t a = 0; a < 2; a++) {
        for (size_t b = 0; b < 2; b++) {
            Complex s = rho1((Eigen::Index)a, (Eigen::Index)b);
            for (size_t r = 0; r < d; r++) {
                const Complex *src = &entries_[r * d];
                Complex *dst = &out[(a * d + r) * big + b * d];
                for (size_t c = 0; c < d; c++) {
                    dst[c] = s * src[c];
                }
            }
        }
    }
    entries_.swap(out);
    labels_.push_back(label);
}

void DensityMatrix::apply_unitary(const ComplexMatrix &u, const std::vector<int> &labels) {
    std::vector<int> slots = slots_for(labels);
    size_t n = labels_.size();
    std::vector<int> row_bits, col_bits;
    for (int s : slots) {
        row_bits.push_back(s + (int)n);
        col_bits.push_back(s);
    }
    kernels::apply_matrix(entries_.data(), 2 * n, row_bits, u);
    kernels::apply_matrix(entries_.data(), 2 * n, col_bits, u.conjugate());
}

void DensityMatrix::apply_superoperator(const ComplexMatrix &s, const std::vector<int> &labels) {
    std::vector<int> slots = slots_for(labels);
    size_t n = labels_.size();
    std::vector<int> bits;
    for (int x : slots) {
        bits.push_back(x);
    }
    for (int x : slots) {
        bits.push_back(x + (int)n);
    }
    kernels::apply_matrix(entries_.data(), 2 * n, bits, s);
}

double DensityMatrix::project_out(int label, int bit) {
    int s = slot_of(label);
    size_t d = dim();
    size_t h = d / 2;
    size_t low_mask = (size_t{1} << s) - 1;
    auto expand = [&](size_t i) { return ((i & ~low_mask) << 1) | (i & low_mask) | ((size_t)bit << s); };
    std::vector<Complex> out(h * h);
    double tr = 0;
    for (size_t r = 0; r < h; r++) {
        size_t rr = expand(r);
        for (size_t c = 0; c < h; c++) {
            out[r * h + c] = entries_[rr * d + expand(c)];
        }
        tr += out[r * h + r].real();
    }
    entries_.swap(out);
    labels_.erase(labels_.begin() + s);
    return tr;
}

void DensityMatrix::trace_out(int label) {
    int s = slot_of(label);
    size_t d = dim();
    size_t h = d / 2;
    size_t low_mask = (size_t{1} << s) - 1;
    size_t one = size_t{1} << s;
    auto expand = [&](size_t i) { return ((i & ~low_mask) << 1) | (i & low_mask); };
    std::vector<Complex> out(h * h);
    for (size_t r = 0; r < h; r++) {
        size_t rr = expand(r);
        for (size_t c = 0; c < h; c++) {
            size_t cc = expand(c);
            out[r * h + c] = entries_[rr * d + cc] + entries_[(rr | one) * d + (cc | one)];
        }
    }
    entries_.swap(out);
    labels_.erase(labels_.begin() + s);
}

ComplexMatrix DensityMatrix::to_matrix() const {
    size_t d = dim();
    ComplexMatrix m((Eigen::Index)d, (Eigen::Index)d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            m((Eigen::Index)r, (Eigen::Index)c) = entries_[r * d + c];
        }
    }
    return m;
}

void apply_channel(DensityMatrix &rho, const KrausChannel &ch, const std::vector<int> &targets) {
    if (ch.dim() != (size_t{1} << targets.size())) {
        throw std::invalid_argument("apply_channel: channel dimension does not match target count");
    }
    if (ch.is_unitary()) {
        rho.apply_unitary(ch.kraus_ops()[0], targets);
    } else {
        rho.apply_superoperator(ch.superoperator(), targets);
    }
}

size_t trajectory_step(StateVector &psi, const KrausChannel &ch, const std::vector<int> &targets, PhiloxStream &rng) {
    if (ch.dim() != (size_t{1} << targets.size())) {
        throw std::invalid_argument("trajectory_step: channel dimension does not match target count");
    }
    const auto &ops = ch.kraus_ops();
    if (ops.size() == 1) {
        psi.apply_operator(ops[0], targets);
        return 0;
    }
    ComplexMatrix red = psi.reduced_density_matrix(targets);
    double total = red.trace().real();
    std::vector<double> weights(ops.size());
    double sum = 0;
    for (size_t j = 0; j < ops.size(); j++) {
        weights[j] = std::max(0.0, (ops[j] * red * ops[j].adjoint()).trace().real());
        sum += weights[j];
    }
    if (!(sum > 1e-14 * std::max(total, 1e-300)) || !(total > 0)) {
        throw std::runtime_error("trajectory_step: every Kraus branch has vanishing norm");
    }
    double u = rng.uniform() * sum;
    size_t pick = ops.size() - 1;
    for (size_t j = 0; j < ops.size(); j++) {
        if (u < weights[j]) {
            pick = j;
            break;
        }
        u -= weights[j];
    }
    while (weights[pick] <= 0 && pick > 0) {
        pick--;
    }
    psi.apply_operator(ops[pick], targets);
    psi.normalize();
    return pick;
}

}  // namespace s17
