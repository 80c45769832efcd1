#pragma once

#include <stdexcept>
#include <string>

namespace wblocks {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke a documented precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// The requested question cannot be settled inside the given window.
class WindowError : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed (inexact division, broken triangularity, ...).
class InternalError : public Error {
public:
    using Error::Error;
};

// The requested computation is too large to attempt.
class ResourceError : public Error {
public:
    using Error::Error;
};

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw InvalidArgument(what);
}

inline void ensure(bool cond, const std::string& what)
{
    if (!cond)
        throw InternalError(what);
}

} // namespace wblocks
