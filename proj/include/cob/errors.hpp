#pragma once

#include <stdexcept>
#include <string>

namespace cob {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : Error {
    using Error::Error;
};
struct SignatureMismatch : Error {
    using Error::Error;
};
struct InternalInvariantError : Error {
    using Error::Error;
};
struct UnknownGenerator : Error {
    using Error::Error;
};
struct NotInCategory : Error {
    using Error::Error;
};
struct NotComposable : Error {
    NotComposable(const std::string& what, std::size_t index)
        : Error(what), letter_index(index) {}
    std::size_t letter_index;
};
struct EndpointMismatch : Error {
    using Error::Error;
};
struct NotALoop : Error {
    using Error::Error;
};
struct NotStronglyConnected : Error {
    using Error::Error;
};
struct FreeBoundaryError : Error {
    using Error::Error;
};
struct SingularPairing : Error {
    using Error::Error;
};
struct OpenSectorGenerator : Error {
    using Error::Error;
};
struct TypeMismatch : Error {
    using Error::Error;
};
struct SyntaxError : Error {
    SyntaxError(const std::string& what, int line_, int col_)
        : Error(what), line(line_), col(col_) {}
    int line;
    int col;
};

}  // namespace cob
