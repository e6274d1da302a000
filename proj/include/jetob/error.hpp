#pragma once

#include <stdexcept>
#include <string>

namespace jetob {

enum class ErrorKind {
    ModelMismatch,
    UnsupportedDegree,
    AxiomViolation,
    Parse,
    UnknownGenerator,
    UnknownBuiltin,
    NotACocycle,
    Degree,
    NoPrimitive,
    Range,
    InvalidScale,
    UnsupportedParity,
    Resource,
    Usage,
    Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace jetob
