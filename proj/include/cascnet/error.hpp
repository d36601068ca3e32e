#pragma once

#include <stdexcept>
#include <string>

namespace cascnet {

// Bad arguments or preconditions (out-of-range ids, invalid parameters).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data (edge-list files, config files).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem problems (unreadable input, unwritable output).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cascnet
