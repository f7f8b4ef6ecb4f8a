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

#include "risntn/error.hpp"

#include <sstream>

namespace risntn
{
    const char *to_string(ErrorKind kind)
    {
        switch (kind)
        {
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::ConstraintViolated:
            return "ConstraintViolated";
        case ErrorKind::SingularInput:
            return "SingularInput";
        case ErrorKind::NonPositiveInput:
            return "NonPositiveInput";
        case ErrorKind::InvalidAltitudes:
            return "InvalidAltitudes";
        case ErrorKind::TooLarge:
            return "TooLarge";
        case ErrorKind::WrongDimension:
            return "WrongDimension";
        case ErrorKind::NonPositivePower:
            return "NonPositivePower";
        case ErrorKind::UnknownKey:
            return "UnknownKey";
        case ErrorKind::TypeError:
            return "TypeError";
        case ErrorKind::ConstraintError:
            return "ConstraintError";
        case ErrorKind::IoError:
            return "IoError";
        case ErrorKind::SweepFailure:
            return "SweepFailure";
        }
        return "Unknown";
    }

    const char *to_string(ConstraintKind kind)
    {
        switch (kind)
        {
        case ConstraintKind::NonUnitModulus:
            return "non-unit modulus";
        case ConstraintKind::NonUnitaryBlock:
            return "non-unitary block";
        case ConstraintKind::NonzeroOffPattern:
            return "nonzero off-pattern entry";
        }
        return "unknown constraint";
    }

    static std::string describe(ConstraintKind constraint, std::size_t block, std::size_t row, std::size_t col,
                                double residual)
    {
        std::ostringstream os;
        os.precision(17);
        os << to_string(constraint) << " at block " << block << ", entry (" << row << ", " << col
           << "), residual " << residual;
        return os.str();
    }

    ConstraintViolated::ConstraintViolated(ConstraintKind constraint_, std::size_t block_, std::size_t row_,
                                           std::size_t col_, double residual_)
        : Error(ErrorKind::ConstraintViolated, describe(constraint_, block_, row_, col_, residual_)),
          constraint(constraint_), block(block_), row(row_), col(col_), residual(residual_)
    {
    }
}
