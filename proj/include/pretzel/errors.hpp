#ifndef PRETZEL_ERRORS_HPP
#define PRETZEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pretzel {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NotSymmetricError : Error {
    using Error::Error;
};
struct SingularMatrixError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct InvalidFractionError : Error {
    using Error::Error;
};
struct GraphError : Error {
    using Error::Error;
};
struct NotBlowDownableError : Error {
    using Error::Error;
};
struct EvenParameterError : Error {
    using Error::Error;
};
struct ZeroParameterError : Error {
    using Error::Error;
};
struct OutOfRangeError : Error {
    using Error::Error;
};
struct OutOfDomainError : Error {
    using Error::Error;
};
struct EvenDeterminantError : Error {
    using Error::Error;
};
struct UnsupportedGraphError : Error {
    using Error::Error;
};
struct FactorizationInvalidError : Error {
    using Error::Error;
};
struct NotNegativeDefiniteError : Error {
    using Error::Error;
};
struct NotASquareError : Error {
    using Error::Error;
};
struct WrongCaseError : Error {
    using Error::Error;
};

} // namespace pretzel

#endif
