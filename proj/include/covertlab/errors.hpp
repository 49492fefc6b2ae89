// Copyright 2026 The covertlab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace covertlab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or subsystem dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix that fails the density-matrix invariants.
class InvalidState : public Error {
 public:
  using Error::Error;
};

/// rho has weight outside the support of sigma (relative entropy / chi^2).
class SupportError : public Error {
 public:
  using Error::Error;
};

/// Qubit projection with success probability below 1e-12.
class DegenerateProjection : public Error {
 public:
  using Error::Error;
};

/// Kraus family whose completeness defect exceeds the allowed threshold.
class CompletenessError : public Error {
 public:
  using Error::Error;
};

/// Photon-number truncation leaks more than the allowed tail mass.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// q_max >= 1: the square-root-law regime does not apply.
class NonCovertRegime : public Error {
 public:
  using Error::Error;
};

/// Parameter outside its documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampler ran out of attempts before landing in the window.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (config file, link table, secret file, grid spec).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace covertlab
