#pragma once

#include <stdexcept>
#include <string>

namespace hochkit {

enum class Errc {
    NonPrime,
    NotEisenstein,
    ZeroPrecision,
    InsufficientValuation,
    NotASubspace,
    NotAGroup,
    NotAMorphism,
    NotInvertible,
    DegreeTooHigh,
    InsufficientPrecision,
    NotIdentityModPiR,
    BadPrecision,
    NotLevelR,
    NotAnIdeal,
    ParseError,
    ValidationError,
    Internal,
};

const char* errc_name(Errc c);

/// All library failures are reported through this exception type; the code
/// identifies the violated precondition, the message carries the details.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace hochkit
