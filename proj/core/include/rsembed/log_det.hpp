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

#pragma once

#include "rsembed/signed_log.hpp"
#include "rsembed/types.hpp"

namespace rsembed {

/// Complex number in polar-log form: value = exp(log_mag + i * phase).
struct LogComplex {
    double log_mag = 0.0;
    double phase = 0.0;  // radians, wrapped to (-pi, pi]
};

/// Sign and log-magnitude of det(a) for a square real matrix, via pivoted LU
/// with per-row scaling. Returns exact zero (sign 0) when a pivot vanishes.
SignedLogReal log_det_signed(const RealMatrix& a);

/// Log-magnitude and phase of det(a) for a square complex matrix.
LogComplex log_det_complex(const ComplexMatrix& a);

}  // namespace rsembed
