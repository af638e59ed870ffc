#pragma once

#include <stdexcept>
#include <string>

namespace ramseykit {

// Bad structure documents, mismatched signatures, out-of-range parameters.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration request whose candidate space exceeds the desk-scale guard.
struct BoundError : std::runtime_error {
    explicit BoundError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ramseykit
