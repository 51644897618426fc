#pragma once

#include <stdexcept>
#include <string>

namespace tensileg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// An iterative solve failed to converge or produced a non-finite value.
class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

/// A requested pose or screw geometry is infeasible.
class GeometryError : public Error {
public:
    explicit GeometryError(const std::string& msg) : Error(msg) {}
};

/// A configuration file or ingested data set is malformed or incomplete.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// A network shape is valid but not supported by the requested closed form.
class UnsupportedConfigurationError : public Error {
public:
    explicit UnsupportedConfigurationError(const std::string& msg) : Error(msg) {}
};

} // namespace tensileg
