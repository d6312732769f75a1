#pragma once

#include <stdexcept>
#include <string>

namespace frameinv {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A value-level contract violation in caller-supplied data (bad arity,
// mismatched rings, malformed problem files). CLI exit code 3.
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

struct RingMismatchError : ValidationError {
    explicit RingMismatchError(const std::string& what) : ValidationError(what) {}
};

// A configured resource cap was hit before the computation finished.
// Diagnostic only: never a wrong answer. CLI exit code 4.
struct StepLimitError : Error {
    explicit StepLimitError(const std::string& what) : Error(what) {}
};

} // namespace frameinv
