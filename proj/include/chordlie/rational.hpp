#pragma once

// Exact rational scalars and the shared error/cap conventions.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chordlie {

using Rat = mpq_class;

// Thrown when a request exceeds a configured size cap (CLI exit code 4).
struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on malformed text input, with a 0-based position (CLI exit code 2).
struct parse_error : std::runtime_error {
    std::size_t pos;
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
};

// Default size caps; every entry point that enumerates or eliminates takes
// these as overridable arguments.
inline constexpr int kEnumCap = 8;           // largest m for LC_m enumeration
inline constexpr int kTensorDegreeCap = 14;  // largest tensor word length
inline constexpr int kCenterCap = 4;         // largest m for center_of_C
inline constexpr int kWeightCap = 5;         // largest homology weight

// "p" or "p/q", canonical form.
std::string rat_str(const Rat& r);

// Parses "p" or "p/q" with optional sign; throws parse_error.
Rat rat_parse(const std::string& s);

}  // namespace chordlie
