#pragma once

#include <stdexcept>
#include <string>

namespace ccode {

// Typed failures, one per contract, so callers can catch precisely.

struct NotPrime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct BadModulus : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadKappa : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadSize : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadLength : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadShape : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidStarter : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidCode : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MalformedFactorization : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotBipyramidal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPerfect : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotACode : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCyclicGroup : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TooManyErasures : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Stuck : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text parse failure with a 1-based source position.
struct ParseError : std::runtime_error {
    ParseError(int line_, int column_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ", col " +
                             std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
    int line;
    int column;
};

}  // namespace ccode
