#pragma once

#include <stdexcept>
#include <string>

namespace median {

// Bad user input: unknown symbols, out-of-range positions, parse failures.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internally inconsistent objects: wrong matrix dimensions, scripts that do
// not connect their source and target.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace median
