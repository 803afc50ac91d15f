#pragma once

#include <stdexcept>
#include <string>

namespace cutloc {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (parameter out of range, point outside a grid).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A curve, grid or sampling could not be built from the given data.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// The inward normal ray at a boundary point leaves the projection basin immediately.
class DegenerateRayError : public Error {
public:
    using Error::Error;
};

/// An identity or check was requested on a shape outside its range of validity
/// (corners where a smooth curve is needed, concave corners, argmax outside an arc).
class InapplicableError : public Error {
public:
    using Error::Error;
};

/// Invalid user configuration: malformed shape file, bad flags, too few samples.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace cutloc
