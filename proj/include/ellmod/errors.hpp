#pragma once

#include <stdexcept>
#include <string>

namespace ellmod {

// One exception type per contract violation named in the module interfaces.
// All derive from std::runtime_error so callers can catch broadly.

#define ELLMOD_DEFINE_ERROR(NAME)                                  \
    struct NAME : std::runtime_error {                             \
        explicit NAME(const std::string& msg = #NAME)              \
            : std::runtime_error(msg) {}                           \
    }

ELLMOD_DEFINE_ERROR(ZeroDenominator);
ELLMOD_DEFINE_ERROR(InvalidModulus);
ELLMOD_DEFINE_ERROR(SingularCurve);
ELLMOD_DEFINE_ERROR(PoleAtPoint);
ELLMOD_DEFINE_ERROR(BadReduction);
ELLMOD_DEFINE_ERROR(UnsupportedCharacteristic);
ELLMOD_DEFINE_ERROR(UnsupportedBase);
ELLMOD_DEFINE_ERROR(UnsupportedParameters);
ELLMOD_DEFINE_ERROR(InvalidInput);
ELLMOD_DEFINE_ERROR(InvalidLevel);
ELLMOD_DEFINE_ERROR(TooFewFactors);
ELLMOD_DEFINE_ERROR(PreconditionFailed);
ELLMOD_DEFINE_ERROR(NoWitnessFound);

#undef ELLMOD_DEFINE_ERROR

} // namespace ellmod
