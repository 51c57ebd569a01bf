#pragma once

#include <stdexcept>
#include <string>

namespace sensewin {

/// Invalid configuration value or malformed input file. Messages carry the
/// offending key path where one exists (e.g. "env.vdd").
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An operation was called outside its contract (wrong stored bit, invalid
/// calibration row, out-of-range trace entry, ...).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical settings too coarse for the requested computation.
struct AccuracyError : std::runtime_error {
    explicit AccuracyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sensewin
