#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zipflaw {

// Base of every library error, so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input line; carries the 1-based physical line number.
struct ParseError : Error {
    ParseError(std::size_t line_number, const std::string& what)
        : Error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
    std::size_t line;
};

// Argument outside its numeric or structural domain.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Least-squares fit impossible (fewer than 2 points, or no x spread).
struct DegenerateFitError : Error {
    explicit DegenerateFitError(const std::string& msg) : Error(msg) {}
};

// Not enough points for the requested split search.
struct InsufficientDataError : Error {
    explicit InsufficientDataError(const std::string& msg) : Error(msg) {}
};

// Strict binning with a bin size that does not divide n; carries the
// nearest divisors on each side so callers can suggest a valid size.
struct DivisibilityError : Error {
    DivisibilityError(std::size_t bin_size, std::size_t n,
                      std::size_t nearest_below, std::size_t nearest_above)
        : Error("bin size " + std::to_string(bin_size) + " does not divide " +
                std::to_string(n) + "; nearest divisors: " +
                std::to_string(nearest_below) + ", " +
                std::to_string(nearest_above)),
          bin_size(bin_size), n(n),
          nearest_below(nearest_below), nearest_above(nearest_above) {}
    std::size_t bin_size;
    std::size_t n;
    std::size_t nearest_below;
    std::size_t nearest_above;
};

}  // namespace zipflaw
