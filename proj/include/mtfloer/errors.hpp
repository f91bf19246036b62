#pragma once

#include <stdexcept>
#include <string>

namespace mtfloer {

// All library failures derive from Error so callers can map them to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BadParams : public Error {
public:
    using Error::Error;
};

class BadGenus : public BadParams {
public:
    using BadParams::BadParams;
};

class ZeroTwist : public BadParams {
public:
    using BadParams::BadParams;
};

class TorsionUnsupported : public Error {
public:
    using Error::Error;
};

class GenusMismatch : public Error {
public:
    using Error::Error;
};

class NotAComplex : public Error {
public:
    using Error::Error;
};

class GateFailure : public Error {
public:
    using Error::Error;
};

class UnknownTable : public Error {
public:
    using Error::Error;
};

} // namespace mtfloer
