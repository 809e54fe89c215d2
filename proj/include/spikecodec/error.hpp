#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spikecodec {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Constant input: zero dynamic range, normalization scale would be zero.
struct DegenerateSignal : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct InvalidParams : Error {
    using Error::Error;
};

struct InvalidSpec : Error {
    using Error::Error;
};

struct EmptySpace : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

/// CSV parse failure; `line` is 1-based (header is line 1).
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line_number)
        : Error(msg + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
    std::size_t line;
};

}  // namespace spikecodec
