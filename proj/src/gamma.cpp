#include "cdgamma/gamma.hpp"

#include "cdgamma/elementary.hpp"
#include "cdgamma/errors.hpp"
#include "cdgamma/hankel.hpp"
#include "cdgamma/lanczos.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cdgamma {

namespace {

constexpr double pi = std::numbers::pi;

// Distance in the slice plane from z to the nearest pole -n, and that n.
std::pair<double, int> nearest_pole(const CDNumber& z) {
    const double x = z.re();
    const double r = z.pure_norm();
    const double n = std::max(0.0, std::round(-x));
    return {std::hypot(x + n, r), static_cast<int>(n)};
}

CDNumber gamma_checked(const CDNumber& z, const char* expression) {
    check_gamma_pole(z, expression);
    return gamma(z);
}

} // namespace

const char* to_string(GammaMethod method) noexcept {
    switch (method) {
    case GammaMethod::slice_lanczos: return "slice_lanczos";
    case GammaMethod::integral: return "integral";
    case GammaMethod::phi_psi_series: return "phi_psi_series";
    case GammaMethod::limit_form: return "limit_form";
    case GammaMethod::euler_product: return "euler_product";
    case GammaMethod::hankel: return "hankel";
    }
    return "unknown";
}

std::optional<GammaMethod> parse_gamma_method(std::string_view name) {
    for (GammaMethod m : kAllGammaMethods) {
        if (name == to_string(m)) return m;
    }
    return std::nullopt;
}

void check_gamma_pole(const CDNumber& z, const char* expression) {
    const auto [dist, n] = nearest_pole(z);
    if (dist < kPoleEps) {
        throw PoleError(-n, std::string(expression) + " is within " + std::to_string(dist) + " of the pole " +
                                std::to_string(-n));
    }
}

CDNumber gamma(const CDNumber& z) {
    check_gamma_pole(z);
    return slice_apply(z, [](std::complex<double> w) { return lanczos::gamma(w); });
}

IntegralResult gamma_integral_detailed(const CDNumber& z, const QuadratureConfig& cfg) {
    if (!(z.re() > 0.0)) throw Error(ErrorKind::domain, "Eulerian integral needs Re z > 0");
    const CDNumber exponent = z - 1.0;
    return integrate_semi_infinite([&exponent](double t) { return real_power(t, exponent) * std::exp(-t); }, 0.0,
                                   cfg);
}

CDNumber gamma_integral(const CDNumber& z, const QuadratureConfig& cfg) {
    return gamma_integral_detailed(z, cfg).value;
}

IntegralResult gamma_phi_series_detailed(const CDNumber& z, int n_terms, const QuadratureConfig& cfg) {
    if (n_terms < 1) throw Error(ErrorKind::invalid_input, "phi series needs at least one term");
    check_gamma_pole(z);
    CDNumber phi(z.level());
    double inv_factorial = 1.0;
    for (int n = 0; n < n_terms; ++n) {
        if (n > 0) inv_factorial /= n;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        phi += cd_inverse(z + static_cast<double>(n)) * (sign * inv_factorial);
    }
    // tail of the alternating series: at most the first omitted term
    const double tail = inv_factorial / n_terms / std::max(kPoleEps, (z + static_cast<double>(n_terms)).norm());

    const CDNumber exponent = z - 1.0;
    IntegralResult psi = integrate_semi_infinite(
        [&exponent](double t) { return real_power(t, exponent) * std::exp(-t); }, 1.0, cfg);
    return {phi + psi.value, psi.error_estimate + tail, psi.evaluations};
}

CDNumber gamma_phi_series(const CDNumber& z, int n_terms, const QuadratureConfig& cfg) {
    return gamma_phi_series_detailed(z, n_terms, cfg).value;
}

CDNumber gamma_limit(const CDNumber& z, long n) {
    if (n < 1) throw Error(ErrorKind::invalid_input, "gamma_limit needs n >= 1");
    auto guard = [&z](long k) {
        if ((z + static_cast<double>(k)).norm() < kPoleEps) {
            throw PoleError(static_cast<int>(-k), "gamma_limit: factor z + " + std::to_string(k) + " is singular");
        }
    };
    guard(0);
    // z (z+1)/1 (z+2)/2 ... (z+n)/n, folded left
    CDNumber folded = z;
    for (long k = 1; k <= n; ++k) {
        guard(k);
        CDNumber factor = z + static_cast<double>(k);
        factor /= static_cast<double>(k);
        folded = folded * factor;
    }
    return real_power(static_cast<double>(n), z) * cd_inverse(folded);
}

CDNumber gamma_euler_product(const CDNumber& z, long n_factors) {
    if (n_factors < 0) throw Error(ErrorKind::invalid_input, "gamma_euler_product needs n >= 0");
    if (z.norm() < kPoleEps) throw PoleError(0, "gamma_euler_product: z^-1 is singular");
    CDNumber product = cd_inverse(z);
    for (long m = 1; m <= n_factors; ++m) {
        const double md = static_cast<double>(m);
        CDNumber denominator = z / md + 1.0;
        if (denominator.norm() < kPoleEps / md) {
            throw PoleError(static_cast<int>(-m), "gamma_euler_product: factor (1 + z/" + std::to_string(m) +
                                                      ") is singular");
        }
        product = product * (real_power(1.0 + 1.0 / md, z) * cd_inverse(denominator));
    }
    return product;
}

double gamma_residue(int n) {
    if (n < 0) throw Error(ErrorKind::invalid_input, "residues live at -n for n >= 0");
    double value = 1.0;
    for (int k = 1; k <= n; ++k) value /= k;
    return (n % 2 == 0) ? value : -value;
}

double gamma_magnitude_asymptotic(double x, double y) {
    if (y == 0.0) throw Error(ErrorKind::invalid_input, "gamma_magnitude_asymptotic needs y != 0");
    const double ay = std::abs(y);
    return std::sqrt(2.0 * pi) * std::pow(ay, x - 0.5) * std::exp(-pi * ay / 2.0);
}

GammaValue evaluate_gamma(GammaMethod method, const CDNumber& z, const GammaOptions& options) {
    switch (method) {
    case GammaMethod::slice_lanczos: {
        CDNumber v = gamma(z);
        // nominal accuracy of the g = 7 backend (about 1e-13 relative after reflection)
        const double err = 1e-13 * v.norm();
        return {std::move(v), err};
    }
    case GammaMethod::integral: {
        IntegralResult r = gamma_integral_detailed(z, options.quadrature);
        return {std::move(r.value), r.error_estimate};
    }
    case GammaMethod::phi_psi_series: {
        IntegralResult r = gamma_phi_series_detailed(z, options.phi_terms, options.quadrature);
        return {std::move(r.value), r.error_estimate};
    }
    case GammaMethod::limit_form: {
        CDNumber v = gamma_limit(z, options.limit_n);
        // leading relative error |z (z + 1)| / (2n)
        const double err = v.norm() * (z * (z + 1.0)).norm() / (2.0 * static_cast<double>(options.limit_n));
        return {std::move(v), err};
    }
    case GammaMethod::euler_product: {
        CDNumber v = gamma_euler_product(z, options.product_factors);
        const double err =
            v.norm() * (z * (z + 1.0)).norm() / (2.0 * static_cast<double>(std::max(1L, options.product_factors)));
        return {std::move(v), err};
    }
    case GammaMethod::hankel: {
        HankelConfig cfg;
        cfg.delta = options.hankel_delta;
        cfg.quadrature = options.quadrature;
        HankelResult r = hankel_gamma_detailed(z, cfg);
        return {std::move(r.value), r.error_estimate};
    }
    }
    throw Error(ErrorKind::invalid_input, "unknown gamma method");
}

const char* to_string(GammaIdentity kind) noexcept {
    switch (kind) {
    case GammaIdentity::recurrence: return "recurrence";
    case GammaIdentity::reflection: return "reflection";
    case GammaIdentity::duplication: return "duplication";
    }
    return "unknown";
}

IdentityReport verify_identity(GammaIdentity kind, const CDNumber& z, double tolerance) {
    switch (kind) {
    case GammaIdentity::recurrence: {
        CDNumber lhs = gamma_checked(z + 1.0, "Gamma(z+1)");
        CDNumber rhs = z * gamma_checked(z, "Gamma(z)");
        return make_report(std::move(lhs), std::move(rhs), tolerance, "Gamma(z+1) = z Gamma(z), slice_lanczos");
    }
    case GammaIdentity::reflection: {
        CDNumber g = gamma_checked(z, "Gamma(z)");
        CDNumber g1 = gamma_checked(1.0 - z, "Gamma(1-z)");
        CDNumber rhs = cd_csc(z * pi) * pi;
        return make_report(g * g1, std::move(rhs), tolerance, "Gamma(z) Gamma(1-z) = pi csc(pi z), slice_lanczos");
    }
    case GammaIdentity::duplication: {
        CDNumber lhs = gamma_checked(z * 2.0, "Gamma(2z)") * std::sqrt(pi);
        CDNumber rhs = real_power(2.0, z * 2.0 - 1.0) * gamma_checked(z, "Gamma(z)") *
                       gamma_checked(z + 0.5, "Gamma(z+1/2)");
        return make_report(std::move(lhs), std::move(rhs), tolerance,
                           "pi^{1/2} Gamma(2z) = 2^{2z-1} Gamma(z) Gamma(z+1/2), slice_lanczos");
    }
    }
    throw Error(ErrorKind::invalid_input, "unknown identity");
}

} // namespace cdgamma
