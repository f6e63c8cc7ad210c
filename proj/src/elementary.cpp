#include "cdgamma/elementary.hpp"

#include "cdgamma/errors.hpp"

#include <cmath>

namespace cdgamma {

CDNumber SliceFrame::recompose() const {
    CDNumber z = axis.value() * radius;
    z[0] = real_part;
    return z;
}

CDNumber SliceFrame::lift(std::complex<double> w) const {
    CDNumber z = axis.value() * w.imag();
    z[0] = w.real();
    return z;
}

SliceFrame slice_decompose(const CDNumber& z) {
    const double r = z.pure_norm();
    if (r == 0.0) return {z.re(), 0.0, PureImaginaryUnit::basis(z.level(), 1)};
    return {z.re(), r, PureImaginaryUnit(z)};
}

CDNumber cd_exp(const CDNumber& z) {
    const SliceFrame f = slice_decompose(z);
    const double ex = std::exp(f.real_part);
    return f.lift({ex * std::cos(f.radius), ex * std::sin(f.radius)});
}

CDNumber cd_ln(const CDNumber& z) {
    const SliceFrame f = slice_decompose(z);
    const double modulus = std::hypot(f.real_part, f.radius);
    if (modulus == 0.0) throw Error(ErrorKind::singular, "Ln(0) is undefined");
    const double angle = std::atan2(f.radius, f.real_part);
    if (std::numbers::pi - angle < kCutEps) {
        throw Error(ErrorKind::branch_cut, "Ln on the negative real axis has no principal value");
    }
    return f.lift({std::log(modulus), angle});
}

CDNumber real_power(double t, const CDNumber& z) {
    if (!(t > 0.0)) throw Error(ErrorKind::domain, "real_power needs a positive base");
    return cd_exp(z * std::log(t));
}

bool share_slice(const CDNumber& a, const CDNumber& b, double tol) {
    const CDNumber pa = a.pure();
    const CDNumber pb = b.pure();
    const double na = pa.norm();
    const double nb = pb.norm();
    if (na <= tol || nb <= tol) return true;
    const CDNumber orthogonal = pb - pa * (inner(pa, pb) / (na * na));
    return orthogonal.norm() <= tol * nb;
}

CDNumber cd_power(const CDNumber& z, const CDNumber& w) {
    if (z.level() != w.level()) throw Error(ErrorKind::level_mismatch, "cd_power: operand levels differ");
    if (!share_slice(z, w)) {
        throw Error(ErrorKind::invalid_input, "cd_power needs base and exponent in a common slice plane");
    }
    return cd_exp(w * cd_ln(z));
}

CDNumber cd_sin(const CDNumber& z) {
    const SliceFrame f = slice_decompose(z);
    return f.lift({std::sin(f.real_part) * std::cosh(f.radius), std::cos(f.real_part) * std::sinh(f.radius)});
}

CDNumber cd_csc(const CDNumber& z) {
    const SliceFrame f = slice_decompose(z);
    const double nearest = std::round(f.real_part);
    if (f.radius < 1e-12 && std::abs(f.real_part - nearest) < 1e-12) {
        throw PoleError(static_cast<int>(nearest), "csc has a pole at the real integer " + std::to_string(static_cast<long>(nearest)));
    }
    return f.lift(1.0 / std::sin(f.as_complex()));
}

} // namespace cdgamma
