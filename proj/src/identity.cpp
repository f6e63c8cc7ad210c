#include "cdgamma/identity.hpp"

namespace cdgamma {

const CDNumber* IdentityReport::diagnostic(const std::string& name) const {
    for (const auto& [key, value] : diagnostics) {
        if (key == name) return &value;
    }
    return nullptr;
}

double normalized_residual(const CDNumber& lhs, const CDNumber& rhs) {
    return distance(lhs, rhs) / (1.0 + rhs.norm());
}

IdentityReport make_report(CDNumber lhs, CDNumber rhs, double tolerance, std::string notes) {
    const double residual = normalized_residual(lhs, rhs);
    return {std::move(lhs), std::move(rhs), residual, tolerance, std::move(notes), true, {}};
}

} // namespace cdgamma
