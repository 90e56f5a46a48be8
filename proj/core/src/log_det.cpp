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

#include "rsembed/log_det.hpp"

#include <cmath>
#include <limits>

#include "rsembed/exceptions.hpp"

namespace rsembed {

namespace {

// LU with partial pivoting on a row-equilibrated copy. The row scales go
// straight into the log accumulator, so badly scaled inputs (rows differing
// by hundreds of orders of magnitude once exponentiated) stay factorable.
template <typename Scalar>
struct LuLogDet {
    double log_mag = 0.0;
    Scalar pivot_phase_product = Scalar(1);  // product of pivot/|pivot|
    int perm_sign = 1;
    bool zero = false;
};

template <typename Matrix, typename Scalar = typename Matrix::Scalar>
LuLogDet<Scalar> lu_log_det(Matrix a) {
    using std::abs;
    const Eigen::Index n = a.rows();
    LuLogDet<Scalar> out;

    for (Eigen::Index i = 0; i < n; ++i) {
        const double row_max = a.row(i).cwiseAbs().maxCoeff();
        if (row_max == 0.0) {
            out.zero = true;
            return out;
        }
        a.row(i) /= row_max;
        out.log_mag += std::log(row_max);
    }

    for (Eigen::Index p = 0; p < n; ++p) {
        Eigen::Index best = p;
        double best_mag = abs(a(p, p));
        for (Eigen::Index i = p + 1; i < n; ++i) {
            const double m = abs(a(i, p));
            if (m > best_mag) {
                best_mag = m;
                best = i;
            }
        }
        if (best_mag == 0.0) {
            out.zero = true;
            return out;
        }
        if (best != p) {
            a.row(p).swap(a.row(best));
            out.perm_sign = -out.perm_sign;
        }
        const Scalar pivot = a(p, p);
        out.log_mag += std::log(abs(pivot));
        out.pivot_phase_product *= pivot / abs(pivot);
        for (Eigen::Index i = p + 1; i < n; ++i) {
            const Scalar f = a(i, p) / pivot;
            a.row(i).tail(n - p - 1) -= f * a.row(p).tail(n - p - 1);
        }
    }
    return out;
}

}  // namespace

SignedLogReal log_det_signed(const RealMatrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("log_det_signed: matrix must be square");
    if (a.rows() == 0)
        return SignedLogReal{1, 0.0};
    const auto lu = lu_log_det(a);
    if (lu.zero)
        return SignedLogReal::zero();
    const int sign = lu.perm_sign * (lu.pivot_phase_product > 0.0 ? 1 : -1);
    return SignedLogReal{sign, lu.log_mag};
}

LogComplex log_det_complex(const ComplexMatrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("log_det_complex: matrix must be square");
    if (a.rows() == 0)
        return LogComplex{0.0, 0.0};
    const auto lu = lu_log_det(a);
    if (lu.zero)
        return LogComplex{-std::numeric_limits<double>::infinity(), 0.0};
    Complex phase = lu.pivot_phase_product * static_cast<double>(lu.perm_sign);
    return LogComplex{lu.log_mag, std::atan2(phase.imag(), phase.real())};
}

}  // namespace rsembed
