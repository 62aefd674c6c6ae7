#ifndef NNIL_ERRORS_HPP
#define NNIL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nnil {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax error in the concrete formula grammar; offset is the 1-based
// character position in the input.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
    std::size_t offset;
};

// Malformed model: bad relation, broken persistence, unknown world, not rooted.
struct ModelError : Error {
    using Error::Error;
};

struct UnknownWorldError : ModelError {
    explicit UnknownWorldError(const std::string& id)
        : ModelError("unknown world: " + id) {}
};

struct NotNNILError : Error {
    using Error::Error;
};

// Raised when a generation or enumeration exceeds its configured budget.
struct ResourceLimitError : Error {
    using Error::Error;
};

}  // namespace nnil

#endif
