#pragma once

#include "cdgamma/cd_number.hpp"

#include <cstdint>
#include <random>

namespace cdgamma {

/// Seeded sampler whose output is fully specified: std::mt19937_64 words turned
/// into doubles as (w >> 11) * 2^-53, normals by Box-Muller on those doubles.
/// (The standard distributions are implementation-defined, so they are avoided.)
class Sampler {
public:
    static constexpr const char* algorithm = "mt19937_64; uniform = (w >> 11) * 2^-53; normal = Box-Muller";

    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// [0, 1)
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal();

    /// Coordinates uniform in [lo, hi).
    CDNumber cd(int level, double lo, double hi);
    /// Uniformly distributed unit pure imaginary element.
    PureImaginaryUnit axis(int level);
    /// x + y M with a fresh random axis M.
    CDNumber on_random_slice(int level, double x, double y);

private:
    std::mt19937_64 engine_;
};

} // namespace cdgamma
