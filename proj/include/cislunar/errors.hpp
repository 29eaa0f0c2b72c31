#pragma once

#include <stdexcept>
#include <string>

namespace cislunar {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Position within the singularity guard radius of a primary.
class SingularPositionError : public Error {
public:
    using Error::Error;
};

/// Adaptive step controller could not meet the requested tolerance.
class StepFailureError : public Error {
public:
    using Error::Error;
};

/// Mismatched shapes, grids, or out-of-range window indices.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Data window too short for the requested operation.
class WindowError : public Error {
public:
    using Error::Error;
};

/// Delay scan exceeded its configured limit without an answer.
class DelayLimitError : public Error {
public:
    using Error::Error;
};

/// Data degenerate for the requested operation (rank collapse, zero
/// reference signal, plane never crossed, too few events, ...).
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration value.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure while reading or writing experiment artifacts.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace cislunar
