#pragma once

#include <array>
#include <complex>

namespace cdgamma::lanczos {

inline constexpr double kG = 7.0;

/// Partial-fraction coefficients for g = 7, n = 9, regenerated by
/// tools/gen_lanczos.py from quadrature values of Gamma(l + 1/2).
inline constexpr std::array<double, 9> kCoefficients = {
    0.99999999999980993228,  676.52036812188509857,    -1259.1392167224028705,
    771.32342877765307885,   -176.61502916214059907,   12.507343278686904814,
    -0.1385710952657201169,  9.9843695780195708589e-6, 1.5056327351493115601e-7,
};

/// Complex Gamma; reflection below Re z = 1/2. No pole handling.
std::complex<double> gamma(std::complex<double> z);

/// log Gamma on Re z >= 1/2 (principal value of the Lanczos form).
std::complex<double> ln_gamma_right(std::complex<double> z);

} // namespace cdgamma::lanczos
