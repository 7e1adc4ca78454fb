#pragma once

#include <stdexcept>
#include <string>

namespace quatring {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error {
    using Error::Error;
};

// The modulus polynomial reduces to something reducible over F_p.
struct NotBasicIrreducibleError : Error {
    using Error::Error;
};

struct BadDegreeError : Error {
    using Error::Error;
};

// Operands belong to structurally different rings.
struct RingMismatchError : Error {
    using Error::Error;
};

// The requested exhaustive computation exceeds the configured size cap.
struct TooLargeError : Error {
    using Error::Error;
};

// A character sum that must be rational came out with a nonreal part;
// indicates a broken character or an arithmetic bug.
struct NonVanishingImaginaryPartError : Error {
    using Error::Error;
};

struct NoUniqueMinimalIdealError : Error {
    using Error::Error;
};

struct UnsupportedRingError : Error {
    using Error::Error;
};

struct EmptyCodeError : Error {
    using Error::Error;
};

// Weight table does not cover the code's alphabet.
struct AlphabetMismatchError : Error {
    using Error::Error;
};

// A proved distance bound failed on computed data; always a bug.
struct BoundViolatedError : Error {
    using Error::Error;
};

struct StaleTokenError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace quatring
