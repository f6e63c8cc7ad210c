#pragma once

#include "cdgamma/cd_number.hpp"
#include "cdgamma/identity.hpp"
#include "cdgamma/quadrature.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace cdgamma {

/// Slice distance from a pole below which Gamma refuses to evaluate.
inline constexpr double kPoleEps = 1e-9;

enum class GammaMethod { slice_lanczos, integral, phi_psi_series, limit_form, euler_product, hankel };

inline constexpr GammaMethod kAllGammaMethods[] = {GammaMethod::slice_lanczos, GammaMethod::integral,
                                                   GammaMethod::phi_psi_series, GammaMethod::limit_form,
                                                   GammaMethod::euler_product,  GammaMethod::hankel};

const char* to_string(GammaMethod method) noexcept;
std::optional<GammaMethod> parse_gamma_method(std::string_view name);

/// Throws PoleError when z lies within kPoleEps of some -n, n >= 0.
void check_gamma_pole(const CDNumber& z, const char* expression = "Gamma(z)");

/// Gamma by slice reduction: Gamma(x + rM) = u + vM with u + iv = Gamma(x + ir).
CDNumber gamma(const CDNumber& z);

/// Eulerian integral of the second kind; Re z > 0 only.
IntegralResult gamma_integral_detailed(const CDNumber& z, const QuadratureConfig& cfg = {});
CDNumber gamma_integral(const CDNumber& z, const QuadratureConfig& cfg = {});

/// Phi(z) + Psi(z): the series sum (-1)^n (n + z)^-1 / n! for the [0, 1] part and
/// quadrature over [1, inf) for the rest. Valid on the whole pole-free algebra.
IntegralResult gamma_phi_series_detailed(const CDNumber& z, int n_terms = 40, const QuadratureConfig& cfg = {});
CDNumber gamma_phi_series(const CDNumber& z, int n_terms = 40, const QuadratureConfig& cfg = {});

/// n! n^z [z (z+1) ... (z+n)]^-1, the product folded left and rescaled by the
/// reals 1..n (which are central) so it never overflows.
CDNumber gamma_limit(const CDNumber& z, long n);

/// z^-1 prod_{m=1}^{n} (1 + 1/m)^z (1 + z/m)^-1.
CDNumber gamma_euler_product(const CDNumber& z, long n_factors);

/// (-1)^n / n!, the residue of Gamma at -n.
double gamma_residue(int n);

/// (2 pi)^{1/2} |y|^{x - 1/2} e^{-pi |y| / 2}.
double gamma_magnitude_asymptotic(double x, double y);

struct GammaOptions {
    QuadratureConfig quadrature;
    int phi_terms = 40;
    long limit_n = 100000;
    long product_factors = 100000;
    double hankel_delta = 0.5;
};

struct GammaValue {
    CDNumber value;
    double error_estimate;
};

/// Dispatches to the requested route. error_estimate is the route's own
/// quadrature or truncation estimate (zero for the Lanczos route's ~1e-15).
GammaValue evaluate_gamma(GammaMethod method, const CDNumber& z, const GammaOptions& options = {});

enum class GammaIdentity { recurrence, reflection, duplication };

const char* to_string(GammaIdentity kind) noexcept;

/// Evaluates both sides with the slice route. PoleError names the sub-expression.
IdentityReport verify_identity(GammaIdentity kind, const CDNumber& z, double tolerance = 1e-10);

} // namespace cdgamma
