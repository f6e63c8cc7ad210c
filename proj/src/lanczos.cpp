#include "cdgamma/lanczos.hpp"

#include <cmath>
#include <numbers>

namespace cdgamma::lanczos {

std::complex<double> ln_gamma_right(std::complex<double> z) {
    z -= 1.0;
    std::complex<double> series = kCoefficients[0];
    for (std::size_t k = 1; k < kCoefficients.size(); ++k) {
        series += kCoefficients[k] / (z + static_cast<double>(k));
    }
    const std::complex<double> t = z + kG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

std::complex<double> gamma(std::complex<double> z) {
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        return pi / (std::sin(pi * z) * gamma(1.0 - z));
    }
    return std::exp(ln_gamma_right(z));
}

} // namespace cdgamma::lanczos
