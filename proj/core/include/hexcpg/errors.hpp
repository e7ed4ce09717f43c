#pragma once

#include <stdexcept>
#include <string>

namespace hexcpg {

/// Malformed input document (config file or replay file).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structurally valid input that violates a documented invariant
/// (unknown key, out-of-range parameter, inconsistent window sizes, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failure while reading or writing artifacts.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Stable process exit codes for the command-line tools.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitConfigParse = 2,
    kExitConfigInvalid = 3,
    kExitIo = 4,
    kExitReplayParse = 5,
    kExitReplayDivergence = 6,
};

}  // namespace hexcpg
