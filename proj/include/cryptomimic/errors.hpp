#pragma once

#include <stdexcept>
#include <string>

namespace cryptomimic {

inline constexpr const char* kVersion = "0.1.0";

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration, CLI usage, or constructor arguments (exit code 1).
struct ConfigError : Error {
    using Error::Error;
};

/// Malformed textual or binary input (bad hex digit, bad magic, truncated record).
struct FormatError : Error {
    using Error::Error;
};

/// Bit-length mismatch or insufficient digits for the requested length.
struct LengthError : Error {
    using Error::Error;
};

/// Input space exhausted while sampling distinct values.
struct CapacityError : Error {
    using Error::Error;
};

/// File could not be opened, read, or written.
struct IoError : Error {
    using Error::Error;
};

/// Non-finite loss or gradient encountered during training.
struct NumericError : Error {
    using Error::Error;
};

} // namespace cryptomimic
