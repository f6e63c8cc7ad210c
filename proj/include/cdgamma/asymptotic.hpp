#pragma once

#include "cdgamma/cd_number.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cdgamma {

/// Bernoulli numbers in the all-positive convention fixed by
/// (z/2) coth(z/2) = 1 + sum_{n>=1} (-1)^{n-1} B_n z^{2n} / (2n)!,
/// so B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, ...
struct BernoulliTable {
    std::vector<double> values; // values[0] = B_1

    double operator()(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
    int size() const { return static_cast<int>(values.size()); }
};

/// B_1..B_n from the Taylor coefficients of x cosh x / sinh x (x = z/2).
BernoulliTable bernoulli_numbers(int n);

/// Table of 30 entries, built once.
const BernoulliTable& shared_bernoulli_table();

/// A truncated expansion dominant(z) + sum_k a_k z^{e_k}, valid for
/// |Arg z| <= pi - sector_margin.
struct AsymptoticSeries {
    std::vector<double> coefficients;
    std::vector<int> exponents;
    std::string dominant_description;
    std::function<CDNumber(const CDNumber&)> dominant;
    double sector_margin = 0.1;
};

struct AsymptoticValue {
    CDNumber value;
    int terms_used;
    /// Magnitude of the last kept term.
    double error_bound;
};

/// Evaluates with optimal truncation: stops before the first term that grows.
/// Throws domain when z lies outside the sector or when the second term is not
/// smaller than the first (|z| too small for the expansion).
AsymptoticValue evaluate(const AsymptoticSeries& series, const CDNumber& z);

/// Ln Gamma(z) ~ (z - 1/2) Ln z - z + ln(2 pi)/2 + sum (-1)^{n-1} B_n / (2n(2n-1) z^{2n-1}).
AsymptoticSeries stirling_series(int n_terms, double sector_margin = 0.1);

AsymptoticValue ln_gamma_stirling_detailed(const CDNumber& z, int n_terms, double sector_margin = 0.1);
CDNumber ln_gamma_stirling(const CDNumber& z, int n_terms, double sector_margin = 0.1);

} // namespace cdgamma
