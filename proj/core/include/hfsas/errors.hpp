#pragma once

#include <stdexcept>
#include <string>

namespace hfsas {

// Error taxonomy mirrors the CLI exit-code contract:
// ConfigError -> 1, ComputeError -> 2, IoError -> 3.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class ComputeError : public std::runtime_error {
public:
    explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hfsas
