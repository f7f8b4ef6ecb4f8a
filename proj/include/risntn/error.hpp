// SPDX-License-Identifier: Apache-2.0
//
// ris-ntn-sim: RIS-assisted non-terrestrial downlink simulator
// Copyright (C) 2026 The ris-ntn-sim authors
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

#ifndef risntn_error_H
#define risntn_error_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace risntn
{
    // Error kinds raised by the library. The CLI maps them onto exit codes.
    enum class ErrorKind
    {
        DimensionMismatch,
        ConstraintViolated,
        SingularInput,
        NonPositiveInput,
        InvalidAltitudes,
        TooLarge,
        WrongDimension,
        NonPositivePower,
        UnknownKey,
        TypeError,
        ConstraintError,
        IoError,
        SweepFailure
    };

    const char *to_string(ErrorKind kind);

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorKind kind, const std::string &message)
            : std::runtime_error(message), kind_(kind) {}

        ErrorKind kind() const noexcept { return kind_; }

    private:
        ErrorKind kind_;
    };

    // Configuration problem tied to one key (UnknownKey, TypeError or ConstraintError)
    class ConfigError : public Error
    {
    public:
        ConfigError(ErrorKind kind, std::string key_, const std::string &message)
            : Error(kind, message), key(std::move(key_)) {}

        std::string key;
    };

    // Which feasibility constraint of a phase-shift matrix failed
    enum class ConstraintKind
    {
        NonUnitModulus,   // diagonal entry of a single-connected matrix
        NonUnitaryBlock,  // Gram residual of a unitary (sub)matrix
        NonzeroOffPattern // entry outside the diagonal / block-diagonal pattern
    };

    const char *to_string(ConstraintKind kind);

    // Raised by validate(). row/col locate the offending entry; for single-connected
    // matrices row == col == m. `block` is the group index (0 for non-grouped).
    class ConstraintViolated : public Error
    {
    public:
        ConstraintViolated(ConstraintKind constraint, std::size_t block, std::size_t row, std::size_t col,
                           double residual);

        ConstraintKind constraint;
        std::size_t block;
        std::size_t row;
        std::size_t col;
        double residual;
    };
}

#endif
