#pragma once

#include "cdgamma/cd_number.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cdgamma {

/// Both sides of an identity evaluated numerically, plus the normalized residual
/// |lhs - rhs| / (1 + |rhs|).
struct IdentityReport {
    CDNumber lhs;
    CDNumber rhs;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string method_notes;
    /// False for reports that are informational only.
    bool asserted = true;
    /// Extra named values (alternative right-hand sides, intermediate factors).
    std::vector<std::pair<std::string, CDNumber>> diagnostics;

    bool passed() const { return residual <= tolerance; }
    const CDNumber* diagnostic(const std::string& name) const;
};

double normalized_residual(const CDNumber& lhs, const CDNumber& rhs);

IdentityReport make_report(CDNumber lhs, CDNumber rhs, double tolerance, std::string notes);

} // namespace cdgamma
