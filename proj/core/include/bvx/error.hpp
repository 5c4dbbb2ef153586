#pragma once

#include <stdexcept>
#include <string>

namespace bvx {

// Invalid input: malformed files, broken invariants of user-supplied data.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A structural precondition of a solver does not hold, or a result failed
// its independent verification.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

}  // namespace bvx
