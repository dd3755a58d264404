#pragma once

#include <stdexcept>
#include <string>

namespace lced {

/// Invalid argument values: bad vertex/edge ids, out-of-range parameters.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input text (graph, demand, cut or sequence files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured budget would be exceeded; the message carries the attempted bound.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A construction precondition failed; the message names the offending element.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural invariant of an input object is violated (e.g. a non-matching).
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lced
