#include "cdgamma/hankel.hpp"

#include "cdgamma/elementary.hpp"
#include "cdgamma/errors.hpp"
#include "cdgamma/gamma.hpp"

#include <cmath>
#include <numbers>

namespace cdgamma {

namespace {

constexpr double pi = std::numbers::pi;

double tail_bound(double radius, double re, double im) {
    return std::exp(-radius + std::abs(re) * std::log(radius) + pi * std::abs(im));
}

// Loop integral of exp(zeta + exponent Ln zeta) along the Hankel contour in
// the slice of `exponent`. The cut edges use the explicit phases -pi / +pi.
HankelResult loop_integral(const CDNumber& exponent, const SliceFrame& frame, const HankelConfig& cfg) {
    const double delta = cfg.delta;
    const double ex = exponent.re();
    const double ey = exponent.pure_norm();
    const double radius = cfg.truncation ? *cfg.truncation : hankel_truncation(exponent, delta, cfg.quadrature.abs_tol);
    const Contour contour = hankel_contour(delta, radius, frame.axis);
    const CDNumber m = frame.axis.value();
    auto integrand = [&exponent, &m](const ContourPoint& p) {
        CDNumber log_zeta = m * p.phase + std::log(p.modulus);
        return cd_exp(p.value + exponent * log_zeta);
    };
    IntegralResult r = integrate_contour(integrand, contour, cfg.quadrature);
    // both rays are cut at R
    const double tail = 2.0 * tail_bound(radius, ex, ey);
    return {std::move(r.value), r.error_estimate + tail, radius};
}

} // namespace

double hankel_truncation(const CDNumber& z, double delta, double abs_tol) {
    if (!(abs_tol > 0.0)) throw Error(ErrorKind::invalid_input, "abs_tol must be positive");
    const double re = z.re();
    const double im = z.pure_norm();
    double radius = std::max(2.0 * delta, 1.0);
    while (tail_bound(radius, re, im) >= abs_tol / 10.0 || radius < std::abs(re)) {
        radius += 1.0;
        if (radius > 1e4) throw Error(ErrorKind::invalid_input, "no Hankel truncation meets the tolerance");
    }
    return radius;
}

HankelResult hankel_loop_integral(const CDNumber& z, const HankelConfig& cfg) {
    const SliceFrame frame = slice_decompose(z);
    return loop_integral(-z, frame, cfg);
}

HankelResult hankel_reciprocal_gamma_detailed(const CDNumber& z, const HankelConfig& cfg) {
    const SliceFrame frame = slice_decompose(z);
    HankelResult r = loop_integral(-z, frame, cfg);
    r.value = r.value * cd_conj(frame.axis.value()) / (2.0 * pi);
    r.error_estimate /= 2.0 * pi;
    return r;
}

CDNumber hankel_reciprocal_gamma(const CDNumber& z, const HankelConfig& cfg) {
    return hankel_reciprocal_gamma_detailed(z, cfg).value;
}

HankelResult hankel_gamma_detailed(const CDNumber& z, const HankelConfig& cfg) {
    const SliceFrame frame = slice_decompose(z);
    const double nearest = std::round(frame.real_part);
    if (std::hypot(frame.real_part - nearest, frame.radius) < kPoleEps) {
        throw Error(ErrorKind::representation, "the contour representation of Gamma degenerates at the integer " +
                                                   std::to_string(static_cast<long>(nearest)) +
                                                   " because sin(pi z) vanishes");
    }
    HankelResult r = loop_integral(z - 1.0, frame, cfg);
    const CDNumber scale = cd_inverse(cd_sin(z * pi) * 2.0);
    const double scale_norm = scale.norm();
    r.value = scale * r.value * cd_conj(frame.axis.value());
    r.error_estimate *= scale_norm;
    return r;
}

CDNumber hankel_gamma(const CDNumber& z, const HankelConfig& cfg) { return hankel_gamma_detailed(z, cfg).value; }

} // namespace cdgamma
