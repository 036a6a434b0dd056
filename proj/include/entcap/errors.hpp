// Copyright 2026 The entcap Authors
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

#ifndef ENTCAP_ERRORS_HPP
#define ENTCAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace entcap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or a bipartite split do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument lies outside the documented domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class NotUnitaryError : public Error {
 public:
  using Error::Error;
};

/// Candidate factor is Hermitian but X*X != I.
class NotInvolutionError : public Error {
 public:
  using Error::Error;
};

/// Candidate factor is +I or -I, so one eigenspace is empty.
class TrivialFactorError : public Error {
 public:
  using Error::Error;
};

/// Operator Schmidt rank exceeds what a measure is defined for.
class RankError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be real (or supported on a subspace) is not.
/// The message carries a diagnostics dump.
class NumericalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed user input: file contents, CLI specs.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace entcap

#endif  // ENTCAP_ERRORS_HPP
