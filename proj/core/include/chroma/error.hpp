#ifndef CHROMA_ERROR_HPP
#define CHROMA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace chroma {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (edge lists, graph6, monomial expressions).
struct ParseError : Error {
    using Error::Error;
};

// A configured enumeration guard was exceeded.
struct BoundError : Error {
    using Error::Error;
};

// A precondition on mathematical input was violated (improper coloring,
// non-permutation, non-monic polynomial, ...).
struct DomainError : Error {
    using Error::Error;
};

}  // namespace chroma

#endif
