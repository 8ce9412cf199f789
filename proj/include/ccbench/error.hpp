#pragma once

#include <stdexcept>
#include <string>

namespace ccbench {

/// Bad user input: malformed files, missing paths, contract violations by the caller.
/// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse failure with a location (line number, JSON path, row number, element path).
class ParseError : public InputError {
public:
    ParseError(std::string location, const std::string& message)
        : InputError(location.empty() ? message : location + ": " + message),
          location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

/// An internal invariant did not hold. The CLI maps this to exit code 2.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ccbench
