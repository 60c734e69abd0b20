#pragma once

#include <stdexcept>
#include <string>

namespace steerkit {

// Bad input values: out-of-range parameters, broken invariants, malformed files.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a hard enumeration limit (the bound scan is exponential in N).
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace steerkit
