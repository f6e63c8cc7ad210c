#include "cdgamma/sampling.hpp"

#include <cmath>
#include <numbers>

namespace cdgamma {

double Sampler::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Sampler::normal() {
    // 1 - u lies in (0, 1], so the logarithm is finite
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

CDNumber Sampler::cd(int level, double lo, double hi) {
    CDNumber z(level);
    for (std::size_t i = 0; i < z.dim(); ++i) z[i] = uniform(lo, hi);
    return z;
}

PureImaginaryUnit Sampler::axis(int level) {
    CDNumber z(level);
    for (;;) {
        for (std::size_t i = 1; i < z.dim(); ++i) z[i] = normal();
        if (z.pure_norm() > 1e-6) return PureImaginaryUnit(z);
    }
}

CDNumber Sampler::on_random_slice(int level, double x, double y) {
    CDNumber z = axis(level).value() * y;
    z[0] = x;
    return z;
}

} // namespace cdgamma
