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

#include <stdexcept>
#include <string>

namespace rsembed {

/// Base class for all rsembed error conditions.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// System dimensions violate a structural requirement (e.g. M <= K).
class InvalidDims : public Error {
  public:
    using Error::Error;
};

/// Matrix operands do not conform.
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// The requested surface configuration cannot exist for these dimensions.
class InfeasibleDims : public Error {
  public:
    using Error::Error;
};

/// A pseudo-inverse was requested for a (numerically) rank-deficient matrix.
class RankDeficient : public Error {
  public:
    using Error::Error;
};

/// gamma = beta*Es / (N0*(beta*Es + N0)) is zero; the received-vector density
/// degenerates to the pure-noise Gaussian and must be evaluated as such.
class DegenerateGamma : public Error {
  public:
    using Error::Error;
};

/// y = 0 requested from a density formula that is defined there only as a
/// t -> 0+ limit.
class ZeroNorm : public Error {
  public:
    using Error::Error;
};

/// Two perturbed eigenvalues in the determinant-ratio oracle collided.
class EigenvalueCollision : public Error {
  public:
    using Error::Error;
};

/// Adaptive quadrature did not reach the requested tolerance.
class QuadratureNonConvergence : public Error {
  public:
    using Error::Error;
};

/// A slope fit needs at least two points.
class FewerThanTwoPoints : public Error {
  public:
    using Error::Error;
};

}  // namespace rsembed
