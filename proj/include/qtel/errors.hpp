// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qtel {

/// Base class for all contract violations raised by this library. Each
/// concrete subclass corresponds to one failure mode so callers and tests
/// can match on the exact kind.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// linalg
struct NotHermitian : Error { using Error::Error; };
struct DimensionOverflow : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// quantum
struct NotNormalized : Error { using Error::Error; };
struct ArityMismatch : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct EmptyKeepSet : Error { using Error::Error; };
struct EmptyMeasureSet : Error { using Error::Error; };
struct InconsistentOutcomes : Error { using Error::Error; };
struct BadPartition : Error { using Error::Error; };

// entropy
struct OverlappingSets : Error { using Error::Error; };
struct WrongRegister : Error { using Error::Error; };

// pipeline
struct UnknownQuantity : Error { using Error::Error; };

} // namespace qtel
