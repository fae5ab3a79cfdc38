#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace synsq {

// Invalid arguments are reported with std::invalid_argument. The types below
// cover the remaining failure classes.

// A numerical routine could not reach its accuracy target.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ridge extraction on a plane that carries no energy.
class NoRidgeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Malformed input file. line() is 1-based; 0 means the whole file.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace synsq
