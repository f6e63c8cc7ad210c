#pragma once

#include "cdgamma/cd_number.hpp"

#include <complex>
#include <numbers>

namespace cdgamma {

/// Angular distance from the negative real axis below which Ln is refused.
inline constexpr double kCutEps = 1e-12;

/// Principal branch: Ln maps into the strip where the pure part has norm <= pi.
struct BranchPolicy {
    static constexpr double cut_angle = std::numbers::pi;
};

/// z = real_part + radius * axis, with axis a unit pure imaginary element.
/// The plane R + axis R is a copy of the complex numbers inside A_v.
struct SliceFrame {
    double real_part;
    double radius;
    PureImaginaryUnit axis;

    CDNumber recompose() const;
    /// real_part + i radius
    std::complex<double> as_complex() const { return {real_part, radius}; }
    /// u + v i  ->  u + v axis
    CDNumber lift(std::complex<double> w) const;
    int level() const { return axis.level(); }
};

/// Real inputs get axis e1.
SliceFrame slice_decompose(const CDNumber& z);

/// Applies a complex function with real Taylor coefficients on the slice of z.
template <class F>
CDNumber slice_apply(const CDNumber& z, F&& f) {
    const SliceFrame frame = slice_decompose(z);
    return frame.lift(f(frame.as_complex()));
}

CDNumber cd_exp(const CDNumber& z);
/// Principal logarithm. Throws singular at zero and branch_cut on the negative reals.
CDNumber cd_ln(const CDNumber& z);
/// t^z = exp(z ln t) for real t > 0.
CDNumber real_power(double t, const CDNumber& z);
/// exp(w Ln z) for z, w in a common slice plane; noncoplanar pairs are rejected.
CDNumber cd_power(const CDNumber& z, const CDNumber& w);
CDNumber cd_sin(const CDNumber& z);
/// Throws pole at real integers.
CDNumber cd_csc(const CDNumber& z);

/// True when the pure parts are parallel (or one of them vanishes).
bool share_slice(const CDNumber& a, const CDNumber& b, double tol = 1e-12);

} // namespace cdgamma
