#pragma once

#include <stdexcept>
#include <string>

namespace hbp {

// Bad arguments, inadmissible parameters, malformed input. CLI exit code 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed serialized graph or rational; offset is a byte position when known.
struct ParseError : ValidationError {
    explicit ParseError(const std::string& what, long offset = -1)
        : ValidationError(offset >= 0 ? what + " (offset " + std::to_string(offset) + ")"
                                      : what),
          offset(offset) {}
    long offset;
};

// Input exceeds a documented size cap. CLI exit code 3.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact integer computation would exceed the 128-bit range; never wrapped.
struct WideOverflowError : LimitError {
    explicit WideOverflowError(const std::string& what, int level = -1)
        : LimitError(what), level(level) {}
    int level;
};

}  // namespace hbp
