#include "jetob/error.hpp"

namespace jetob {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::ModelMismatch: return "model-mismatch";
    case ErrorKind::UnsupportedDegree: return "unsupported-degree";
    case ErrorKind::AxiomViolation: return "axiom-violation";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::UnknownGenerator: return "unknown-generator";
    case ErrorKind::UnknownBuiltin: return "unknown-builtin";
    case ErrorKind::NotACocycle: return "not-a-cocycle";
    case ErrorKind::Degree: return "degree";
    case ErrorKind::NoPrimitive: return "no-primitive";
    case ErrorKind::Range: return "range";
    case ErrorKind::InvalidScale: return "invalid-scale";
    case ErrorKind::UnsupportedParity: return "unsupported-parity";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

} // namespace jetob
