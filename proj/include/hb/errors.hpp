#pragma once

#include <stdexcept>
#include <string>

namespace hb {

// Error taxonomy mirrors the CLI exit codes: invalid_input -> 2,
// io_error -> 3, numeric_error -> 4.

struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hb
