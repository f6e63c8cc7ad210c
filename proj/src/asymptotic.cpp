#include "cdgamma/asymptotic.hpp"

#include "cdgamma/elementary.hpp"
#include "cdgamma/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace cdgamma {

BernoulliTable bernoulli_numbers(int n) {
    if (n < 1) throw Error(ErrorKind::invalid_input, "bernoulli_numbers needs n >= 1");
    // x cosh x / sinh x = sum c_k x^{2k}: divide sum x^{2k}/(2k)! by sum x^{2k}/(2k+1)!
    const auto count = static_cast<std::size_t>(n) + 1;
    std::vector<double> inv_fact(2 * count + 2, 1.0);
    for (std::size_t i = 1; i < inv_fact.size(); ++i) inv_fact[i] = inv_fact[i - 1] / static_cast<double>(i);
    std::vector<double> c(count);
    for (std::size_t k = 0; k < count; ++k) {
        double acc = inv_fact[2 * k];
        for (std::size_t j = 0; j < k; ++j) acc -= c[j] * inv_fact[2 * (k - j) + 1];
        c[k] = acc;
    }
    // with x = z/2 the z^{2k} coefficient is c_k / 4^k = (-1)^{k-1} B_k / (2k)!
    BernoulliTable table;
    table.values.reserve(static_cast<std::size_t>(n));
    for (std::size_t k = 1; k < count; ++k) {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        table.values.push_back(sign * c[k] / inv_fact[2 * k] / std::ldexp(1.0, static_cast<int>(2 * k)));
    }
    return table;
}

const BernoulliTable& shared_bernoulli_table() {
    static const BernoulliTable table = bernoulli_numbers(30);
    return table;
}

AsymptoticValue evaluate(const AsymptoticSeries& series, const CDNumber& z) {
    const SliceFrame frame = slice_decompose(z);
    const double arg = std::atan2(frame.radius, frame.real_part);
    if (arg > std::numbers::pi - series.sector_margin) {
        throw Error(ErrorKind::domain, "argument lies outside the sector |Arg z| <= pi - " +
                                           std::to_string(series.sector_margin));
    }
    CDNumber value = series.dominant(z);
    const CDNumber inv = cd_inverse(z);
    double previous = std::numeric_limits<double>::infinity();
    int used = 0;
    for (std::size_t k = 0; k < series.coefficients.size(); ++k) {
        CDNumber power = CDNumber::real(z.level(), 1.0);
        const int e = series.exponents[k];
        const CDNumber& base = e < 0 ? inv : z;
        for (int i = 0; i < std::abs(e); ++i) power = power * base;
        CDNumber term = power * series.coefficients[k];
        const double magnitude = term.norm();
        if (magnitude > previous) {
            if (k == 1) {
                throw Error(ErrorKind::domain, "|z| too small: the second term of the expansion is not smaller than the first");
            }
            return {std::move(value), used, previous};
        }
        value += term;
        previous = magnitude;
        ++used;
    }
    return {std::move(value), used, used == 0 ? 0.0 : previous};
}

AsymptoticSeries stirling_series(int n_terms, double sector_margin) {
    if (n_terms < 0) throw Error(ErrorKind::invalid_input, "stirling_series needs n_terms >= 0");
    if (!(sector_margin > 0.0 && sector_margin < std::numbers::pi / 2)) {
        throw Error(ErrorKind::invalid_input, "sector margin must lie in (0, pi/2)");
    }
    const BernoulliTable& shared = shared_bernoulli_table();
    const BernoulliTable bern = n_terms <= shared.size() ? shared : bernoulli_numbers(n_terms);
    AsymptoticSeries s;
    s.sector_margin = sector_margin;
    s.dominant_description = "(z - 1/2) Ln z - z + ln(2 pi)/2";
    s.dominant = [](const CDNumber& z) {
        return (z - 0.5) * cd_ln(z) - z + 0.5 * std::log(2.0 * std::numbers::pi);
    };
    for (int n = 1; n <= n_terms; ++n) {
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;
        s.coefficients.push_back(sign * bern(n) / (2.0 * n * (2.0 * n - 1.0)));
        s.exponents.push_back(-(2 * n - 1));
    }
    return s;
}

AsymptoticValue ln_gamma_stirling_detailed(const CDNumber& z, int n_terms, double sector_margin) {
    return evaluate(stirling_series(n_terms, sector_margin), z);
}

CDNumber ln_gamma_stirling(const CDNumber& z, int n_terms, double sector_margin) {
    return ln_gamma_stirling_detailed(z, n_terms, sector_margin).value;
}

} // namespace cdgamma
