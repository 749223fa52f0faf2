#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turan {

/// Thrown when a graph would exceed the fixed vertex capacity.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Syntax or range error in one of the text formats (graph6, family DSL,
/// campaign config). `offset()` is the byte position of the problem.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace turan
