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

#include "s17/channel.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace s17 {

ComplexMatrix superoperator_of(const ComplexMatrix &a, const ComplexMatrix &b) {
    return kron(b.transpose(), a);
}

ComplexMatrix superoperator_of(const ComplexMatrix &u) {
    return kron(u.conjugate(), u);
}

ComplexVector vectorize(const ComplexMatrix &rho) {
    return Eigen::Map<const ComplexVector>(rho.data(), rho.size());
}

ComplexMatrix unvectorize(const ComplexVector &v, Eigen::Index dim) {
    if (v.size() != dim * dim) {
        throw std::invalid_argument("unvectorize: size mismatch");
    }
    return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

namespace {

Eigen::Index superoperator_dim(const ComplexMatrix &s) {
    if (s.rows() != s.cols()) {
        throw std::invalid_argument("superoperator must be square");
    }
    auto d = (Eigen::Index)std::llround(std::sqrt((double)s.rows()));
    if (d * d != s.rows() || d == 0) {
        throw std::invalid_argument("superoperator size is not a perfect square");
    }
    return d;
}

}  // namespace

ComplexMatrix choi_from_superoperator(const ComplexMatrix &s) {
    Eigen::Index d = superoperator_dim(s);
    ComplexMatrix choi(d * d, d * d);
    for (Eigen::Index i = 0; i < d; i++) {
        for (Eigen::Index j = 0; j < d; j++) {
            for (Eigen::Index k = 0; k < d; k++) {
                for (Eigen::Index l = 0; l < d; l++) {
                    choi(i * d + k, j * d + l) = s(k + d * l, i + d * j);
                }
            }
        }
    }
    return choi;
}

double trace_preservation_defect(const std::vector<ComplexMatrix> &kraus_ops) {
    if (kraus_ops.empty()) {
        return INFINITY;
    }
    ComplexMatrix acc = ComplexMatrix::Zero(kraus_ops[0].cols(), kraus_ops[0].cols());
    for (const auto &k : kraus_ops) {
        acc += k.adjoint() * k;
    }
    return max_abs(acc - ComplexMatrix::Identity(acc.rows(), acc.cols()));
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops, double cp_defect)
    : dim_(0), kraus_ops_(std::move(kraus_ops)), cp_defect_(cp_defect) {
    if (kraus_ops_.empty()) {
        throw std::invalid_argument("KrausChannel needs at least one Kraus operator");
    }
    dim_ = (size_t)kraus_ops_[0].rows();
    for (const auto &k : kraus_ops_) {
        if ((size_t)k.rows() != dim_ || (size_t)k.cols() != dim_) {
            throw std::invalid_argument("KrausChannel: Kraus operators must all be dim x dim");
        }
    }
    double defect = trace_preservation_defect(kraus_ops_);
    if (defect > 1e-8) {
        std::stringstream ss;
        ss << "KrausChannel is not trace preserving: max |sum K^dagger K - I| = " << defect;
        throw std::invalid_argument(ss.str());
    }
}

KrausChannel KrausChannel::identity(size_t dim) {
    return KrausChannel({gates::identity(dim)});
}

KrausChannel KrausChannel::unitary(const ComplexMatrix &u) {
    return KrausChannel({u});
}

ComplexMatrix KrausChannel::superoperator() const {
    auto d2 = (Eigen::Index)(dim_ * dim_);
    ComplexMatrix s = ComplexMatrix::Zero(d2, d2);
    for (const auto &k : kraus_ops_) {
        s += superoperator_of(k);
    }
    return s;
}

ComplexMatrix KrausChannel::choi() const {
    return choi_from_superoperator(superoperator());
}

ComplexMatrix KrausChannel::apply(const ComplexMatrix &rho) const {
    if ((size_t)rho.rows() != dim_ || (size_t)rho.cols() != dim_) {
        throw std::invalid_argument("KrausChannel::apply: dimension mismatch");
    }
    ComplexMatrix out = ComplexMatrix::Zero(rho.rows(), rho.cols());
    for (const auto &k : kraus_ops_) {
        out += k * rho * k.adjoint();
    }
    return out;
}

KrausChannel KrausChannel::then(const KrausChannel &next) const {
    if (next.dim_ != dim_) {
        throw std::invalid_argument("KrausChannel::then: dimension mismatch");
    }
    if (is_unitary() && next.is_unitary()) {
        return KrausChannel::unitary(next.kraus_ops_[0] * kraus_ops_[0]);
    }
    return kraus_from_superoperator(next.superoperator() * superoperator());
}

KrausChannel kraus_from_superoperator(const ComplexMatrix &s, double cp_tolerance) {
    Eigen::Index d = superoperator_dim(s);
    ComplexMatrix choi = choi_from_superoperator(s);
    // A Hermiticity-preserving map has a Hermitian Choi matrix; anything else is not a channel.
    double asym = hermiticity_defect(choi);
    if (asym > 1e-8) {
        std::stringstream ss;
        ss << "superoperator is not Hermiticity preserving (Choi asymmetry " << asym << ")";
        throw std::domain_error(ss.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig((choi + choi.adjoint()) * 0.5);
    const auto &values = eig.eigenvalues();
    const auto &vectors = eig.eigenvectors();

    double largest = values.maxCoeff();
    double clipped = 0.0;
    std::vector<ComplexMatrix> kraus;
    for (Eigen::Index n = values.size() - 1; n >= 0; n--) {
        double lambda = values(n);
        if (lambda < 0) {
            if (lambda < -cp_tolerance) {
                std::stringstream ss;
                ss << "map is not completely positive: Choi eigenvalue " << lambda << " is below -"
                   << cp_tolerance;
                throw std::domain_error(ss.str());
            }
            clipped = std::max(clipped, -lambda);
            continue;
        }
        if (lambda <= 1e-14 * std::max(largest, 1.0)) {
            continue;
        }
        ComplexMatrix k(d, d);
        double scale = std::sqrt(lambda);
        for (Eigen::Index i = 0; i < d; i++) {
            for (Eigen::Index row = 0; row < d; row++) {
                k(row, i) = scale * vectors(i * d + row, n);
            }
        }
        kraus.push_back(std::move(k));
    }
    double tp = trace_preservation_defect(kraus);
    if (tp > 1e-6) {
        std::stringstream ss;
        ss << "map is not trace preserving after CP clipping: defect " << tp;
        throw std::domain_error(ss.str());
    }
    if (tp > 1e-8) {
        // Renormalize tiny clipping losses so the channel invariant holds exactly.
        ComplexMatrix acc = ComplexMatrix::Zero(d, d);
        for (const auto &k : kraus) {
            acc += k.adjoint() * k;
        }
        ComplexMatrix fix = hermitian_function(acc, [](double x) { return Complex{1.0 / std::sqrt(x), 0.0}; }, 1e-8);
        for (auto &k : kraus) {
            k = k * fix;
        }
    }
    return KrausChannel(std::move(kraus), clipped);
}

}  // namespace s17
