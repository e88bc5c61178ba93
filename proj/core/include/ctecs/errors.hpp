// Copyright 2026 The ctecs Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctecs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Arguments with incompatible shapes (dimension mismatch, bad index, ...).
class ShapeError : public Error {
   public:
    using Error::Error;
};

/// Invalid user-supplied parameters (non-positive times, unknown units, ...).
class ConfigError : public Error {
   public:
    using Error::Error;
};

/// Physics guards: a requested computation is not representable or not
/// physically meaningful (truncation too small, near-null state, ...).
class PhysicsGuardError : public Error {
   public:
    using Error::Error;
};

class TruncationError : public PhysicsGuardError {
   public:
    TruncationError(double abs_alpha, std::size_t n_trunc, std::size_t required);
    TruncationError(const std::string& what, std::size_t required);

    std::size_t required() const noexcept { return required_; }

   private:
    std::size_t required_;
};

class NearNullStateError : public PhysicsGuardError {
   public:
    using PhysicsGuardError::PhysicsGuardError;
};

/// A forced measurement outcome has (numerically) zero probability.
class OutcomeImpossibleError : public NearNullStateError {
   public:
    using NearNullStateError::NearNullStateError;
};

/// Internal invariant violated; indicates a bug rather than bad input.
class InvariantError : public Error {
   public:
    using Error::Error;
};

}  // namespace ctecs
