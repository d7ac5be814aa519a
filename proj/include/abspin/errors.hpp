#pragma once

#include <stdexcept>
#include <string>

namespace abspin {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad inputs: malformed scenarios, broken invariants, out-of-range values.
// The CLI maps these to exit code 1.
struct ValidationError : Error {
    using Error::Error;
};

// Failures while computing: singular evaluation points, violated physics
// preconditions, unwritable outputs. The CLI maps these to exit code 2.
struct PhysicsError : Error {
    using Error::Error;
};

// Scenario-document parse failure with location and a machine-readable code
// ("syntax", "unknown_key", "invariant", "range").
struct ParseError : ValidationError {
    ParseError(std::string code_, int line_, int col_, const std::string& message)
        : ValidationError(std::to_string(line_) + ":" + std::to_string(col_) + ": " + code_ +
                          ": " + message),
          code(std::move(code_)),
          line(line_),
          col(col_) {}

    std::string code;
    int line;
    int col;
};

} // namespace abspin
