// Copyright 2026 The selquant Authors
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

#ifndef SELQUANT_ERROR_HPP
#define SELQUANT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace selquant {

/// Machine-readable failure classes. The CLI prints `to_string(kind)` as the
/// cause when it exits with status 2.
enum class ErrorKind {
    InvalidArgument,
    ParseError,
    // numberfield
    NotSquareFree,
    NotIsolating,
    Reducible,
    DivisionByZero,
    FieldMismatch,
    DegenerateDegrees,
    RootNotInField,
    // newton
    SeedOutsideBasin,
    DerivativeVanishes,
    // linalg
    NotSquare,
    IndexOutOfRange,
    DimensionMismatch,
    NoConvergence,
    // process
    CompletenessViolation,
    NotHermitian,
    TraceViolation,
    PsdViolation,
    UndefinedBranch,
    NotReal,
    // decide
    NoLimit,
    SingularAtOne,
    InternalBoundViolation,
    NotStochastic,
    NonAbsorbingChain,
    RouteMismatch,
    // frontends
    BadTargets,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {
    }

    ErrorKind kind() const noexcept {
        return kind_;
    }

  private:
    ErrorKind kind_;
};

}  // namespace selquant

#endif
