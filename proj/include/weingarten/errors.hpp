#ifndef WEINGARTEN_ERRORS_HPP
#define WEINGARTEN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weingarten {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation left the coordinate model or a kernel precondition (radicand,
// log argument, ...) failed beyond tolerance.
struct DomainError : Error {
    using Error::Error;
};

// Arclength kernels refuse to evaluate below the axis threshold; the solver
// uses series data there instead.
struct SingularAxis : DomainError {
    using DomainError::DomainError;
};

struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t offset_)
        : Error(what + " (offset " + std::to_string(offset_) + ")"), offset(offset_) {}
};

struct UnknownIdentifier : ParseError {
    using ParseError::ParseError;
};

struct EvalError : Error {
    using Error::Error;
};

struct NoRoot : Error {
    using Error::Error;
};

struct NoFixedPoint : Error {
    using Error::Error;
};

struct ConstructionError : Error {
    using Error::Error;
};

struct NonConvergent : Error {
    using Error::Error;
};

struct TangencyError : Error {
    using Error::Error;
};

struct PoleError : Error {
    using Error::Error;
};

// Invalid run configuration (CLI flags, seed-config file, class spec).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace weingarten

#endif
