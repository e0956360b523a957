#pragma once

#include <stdexcept>
#include <string>

namespace stategeom {

// Malformed input: wrong dimensions, bad weights, unparsable rationals.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input outside an operation's domain (interior point for a
// detection ratio, non-exposed face for a support counter, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Desk-scale guard exceeded (face lattice / ratio matrix enumeration).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stategeom
