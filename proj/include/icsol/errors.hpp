#pragma once

#include <stdexcept>
#include <string>

namespace icsol {

// vectors/matrices of mismatched length
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// malformed problem structure (bad cover, non-unicast input, ...)
struct StructureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// instance / code text that does not conform to the file format
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// configured search budget exceeded
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace icsol
