#ifndef HCENT_ERRORS_HPP
#define HCENT_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hcent {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex id outside [0, order).
struct InvalidVertex : Error {
    using Error::Error;
};

// Edge of the form (v, v).
struct SelfLoop : Error {
    using Error::Error;
};

// Requested graph order below 1.
struct EmptyGraph : Error {
    using Error::Error;
};

// Centrality is undefined on an order-1 graph (the normalizer is zero).
struct TrivialGraph : Error {
    using Error::Error;
};

// Operation scoped to connected graphs received a disconnected one.
struct DisconnectedInput : Error {
    using Error::Error;
};

// Family parameter below the family's minimum, or an index out of range.
struct InvalidFamilyParameter : Error {
    InvalidFamilyParameter(const std::string &msg, std::uint32_t minimum_value = 0)
        : Error(msg), minimum(minimum_value) {}

    std::uint32_t minimum;
};

// Malformed input text; line is 1-based, 0 when no line applies.
struct ParseError : Error {
    explicit ParseError(const std::string &msg, std::size_t line_number = 0)
        : Error(msg), line(line_number) {}

    std::size_t line;
};

} // namespace hcent

#endif // HCENT_ERRORS_HPP
