#pragma once

#include <stdexcept>
#include <string>

namespace polycoh {

// Malformed user input: bad facet lists, bad JSON, bad CLI arguments.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A violated structural invariant (d*d != 0, dimension mismatch, ...).
// These indicate a broken model, never user input, and are never swallowed.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polycoh
