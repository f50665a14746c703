#ifndef GRAPHPOLY_ERRORS_HPP
#define GRAPHPOLY_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphpoly {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument values: out-of-range vertex, loop edge, non-edge deletion.
class InputError : public Error {
public:
    using Error::Error;
};

/// A size limit was exceeded: vertex capacity, edge-subset cap, ground-set cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Integer overflow in exact arithmetic. Results are never wrapped.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. `position()` is a byte offset for single-line
/// formats (graph6, polynomial text) and a 1-based line number for line
/// oriented formats (edge lists).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace graphpoly

#endif
