#pragma once

#include "cdgamma/cd_number.hpp"
#include "cdgamma/quadrature.hpp"

#include <optional>

namespace cdgamma {

struct HankelConfig {
    /// Radius of the circle around the branch point.
    double delta = 0.5;
    /// Ray truncation; chosen from the tail bound when empty.
    std::optional<double> truncation;
    QuadratureConfig quadrature;
};

struct HankelResult {
    CDNumber value;
    double error_estimate;
    double truncation;
};

/// Smallest R >= 2 delta with e^{-R} R^{|Re z|} e^{pi |Im z|} < abs_tol / 10.
double hankel_truncation(const CDNumber& z, double delta, double abs_tol);

/// Integral of e^zeta zeta^{-z} over the Hankel loop in the slice of z.
HankelResult hankel_loop_integral(const CDNumber& z, const HankelConfig& cfg = {});

/// 1/Gamma(z) = (2 pi)^-1 (loop integral of e^zeta zeta^{-z}) M^*. Entire in z.
HankelResult hankel_reciprocal_gamma_detailed(const CDNumber& z, const HankelConfig& cfg = {});
CDNumber hankel_reciprocal_gamma(const CDNumber& z, const HankelConfig& cfg = {});

/// Gamma(z) = (2 sin(pi z))^-1 (loop integral of e^zeta zeta^{z-1}) M^*.
/// Throws representation at real integers, where sin(pi z) vanishes.
HankelResult hankel_gamma_detailed(const CDNumber& z, const HankelConfig& cfg = {});
CDNumber hankel_gamma(const CDNumber& z, const HankelConfig& cfg = {});

} // namespace cdgamma
