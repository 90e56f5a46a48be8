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

#include "rsembed/rng.hpp"
#include "rsembed/types.hpp"

namespace rsembed {

/// rows x cols matrix with i.i.d. CN(0,1) entries, filled column-major.
ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, RngStream& rng);

/// Haar-distributed m x m unitary matrix.
///
/// QR decomposition of an i.i.d. complex-Gaussian matrix, with column j of Q
/// multiplied by the phase of R_jj. The phase correction makes the R diagonal
/// of the underlying factorization real positive; Q of the plain QR is *not*
/// Haar-distributed.
ComplexMatrix sample_haar_unitary(int m, RngStream& rng);

/// m x k matrix distributed as the first k columns of a Haar m x m unitary
/// (isotropic on the semi-unitary manifold). Computed directly from the
/// phase-corrected QR of an m x k Gaussian matrix, which has the same law.
ComplexMatrix sample_isotropic_columns(int m, int k, RngStream& rng);

}  // namespace rsembed
