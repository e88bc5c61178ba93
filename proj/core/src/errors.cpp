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

#include "ctecs/errors.hpp"

#include <sstream>

namespace ctecs {

namespace {

std::string truncation_message(double abs_alpha, std::size_t n_trunc, std::size_t required) {
    std::ostringstream os;
    os << "truncation rule violated: |alpha| = " << abs_alpha << " needs n_trunc >= " << required
       << " (got " << n_trunc << ")";
    return os.str();
}

}  // namespace

TruncationError::TruncationError(double abs_alpha, std::size_t n_trunc, std::size_t required)
    : PhysicsGuardError(truncation_message(abs_alpha, n_trunc, required)), required_(required) {}

TruncationError::TruncationError(const std::string& what, std::size_t required)
    : PhysicsGuardError(what), required_(required) {}

}  // namespace ctecs
