#include "cdgamma/errors.hpp"

namespace cdgamma {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_input: return "invalid_input";
    case ErrorKind::level_mismatch: return "level_mismatch";
    case ErrorKind::singular: return "singular";
    case ErrorKind::zero_divisor: return "zero_divisor";
    case ErrorKind::branch_cut: return "branch_cut";
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::representation: return "representation";
    case ErrorKind::accuracy: return "accuracy";
    case ErrorKind::evaluation: return "evaluation";
    case ErrorKind::parse: return "parse";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::convergence_risk: return "convergence_risk";
    }
    return "unknown";
}

} // namespace cdgamma
