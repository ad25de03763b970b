#pragma once

#include <stdexcept>
#include <string>

namespace mublab {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gf
struct NonPrimeCharacteristic : Error { using Error::Error; };
struct ReduciblePolynomial : Error { using Error::Error; };
struct SpecMismatch : Error { using Error::Error; };
struct ZeroInverse : Error { using Error::Error; };

// groups
struct PrimeDoesNotDivideOrder : Error { using Error::Error; };
struct NotFrobeniusComplement : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };
struct OrderTooLarge : Error { using Error::Error; };
struct OrderDoesNotDivide : Error { using Error::Error; };

// repr
struct NoActionAttached : Error { using Error::Error; };
struct NotTranslationSubgroup : Error { using Error::Error; };
struct WrongElementOrder : Error { using Error::Error; };

// mub
struct NonPrimeDimension : Error { using Error::Error; };

// covariance
struct CapExceeded : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };

// certifier
struct NotOddPrime : Error { using Error::Error; };

} // namespace mublab
