#pragma once

#include <stdexcept>
#include <string>

namespace srs {

// Bad input, bad file, bad flag combination. CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Laser frequency inside the guard band of an atomic resonance, where the
// second-order expressions are meaningless. CLI exit code 3.
class ResonanceError : public std::runtime_error {
public:
    explicit ResonanceError(const std::string& what) : std::runtime_error(what) {}
};

// Iterative solver ran out of iterations. CLI exit code 4.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace srs
