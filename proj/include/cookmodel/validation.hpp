#pragma once

#include <stdexcept>
#include <string>

namespace cookmodel {

/// Thrown by domain operations when an input violates a documented invariant
/// (empty mix, zero denominator, partition mismatch, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cookmodel
