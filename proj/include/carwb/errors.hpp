#pragma once

#include <stdexcept>
#include <string>

namespace carwb {

struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParamOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidModulus : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoIntertwiner : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse errors carry a 1-based line/column position.
struct SyntaxError : std::runtime_error {
    int line;
    int column;
    SyntaxError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

struct UnknownGenerator : SyntaxError {
    using SyntaxError::SyntaxError;
};

}  // namespace carwb
