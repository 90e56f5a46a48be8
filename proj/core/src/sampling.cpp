// SPDX-License-Identifier: Apache-2.0
//
// rsembed - reconfigurable-surface channel orthogonalization and
// information-embedding simulator
// Copyright (C) 2026 rsembed contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rsembed/sampling.hpp"

#include <Eigen/QR>

#include "rsembed/exceptions.hpp"

namespace rsembed {

ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, RngStream& rng) {
    ComplexMatrix a(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i)
            a(i, j) = rng.complex_normal();
    return a;
}

namespace {

// Multiply column j of q by the phase of r_jj so that the factorization has a
// real-positive R diagonal; that Q factor is the Haar-distributed one.
void apply_phase_correction(ComplexMatrix& q, const ComplexMatrix& qr_packed) {
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        const Complex d = qr_packed(j, j);
        const double mag = std::abs(d);
        q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
    }
}

}  // namespace

ComplexMatrix sample_haar_unitary(int m, RngStream& rng) {
    if (m < 1)
        throw InvalidDims("sample_haar_unitary: m must be >= 1");
    ComplexMatrix a = complex_gaussian(m, m, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    ComplexMatrix q = qr.householderQ();
    apply_phase_correction(q, qr.matrixQR());
    return q;
}

ComplexMatrix sample_isotropic_columns(int m, int k, RngStream& rng) {
    if (m < 1 || k < 1 || k > m)
        throw InvalidDims("sample_isotropic_columns: need 1 <= k <= m");
    ComplexMatrix a = complex_gaussian(m, k, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(a);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(m, k);
    apply_phase_correction(q, qr.matrixQR());
    return q;
}

}  // namespace rsembed
