#pragma once

#include <stdexcept>
#include <string>

namespace setfn {

/// Thrown on any contract violation: malformed input, ground-set mismatch,
/// out-of-range element, exhaustive-search cap exceeded.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

} // namespace setfn
