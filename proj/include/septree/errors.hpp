#pragma once

#include <stdexcept>
#include <string>

namespace septree {

/// Malformed or out-of-domain input (unknown vertex, duplicate edge, bad file).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A structural guarantee of the construction was observed to fail.
/// On validated input this indicates a bug, never bad user data.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A configured size limit was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace septree
