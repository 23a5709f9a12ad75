#pragma once

#include <stdexcept>
#include <string>

namespace wavecorner {

// Filesystem and file-format failures: missing or unwritable files,
// malformed PGM content, truncated data.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated value preconditions: bad dimensions, negative variance,
// out-of-range parameters, inconsistent pyramids.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace wavecorner
