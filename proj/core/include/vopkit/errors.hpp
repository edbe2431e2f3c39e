#pragma once

#include <stdexcept>
#include <string>

namespace vopkit {

/// Base class for every error raised by the engine.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rational strings, JSON documents, CLI values).
struct ParseError : Error {
    using Error::Error;
};

/// A family or modifier specification violates its constraints
/// (empty modifier, vanishing top coefficient, c in {0,1}, ...).
struct InvalidSpec : Error {
    using Error::Error;
};

}  // namespace vopkit
