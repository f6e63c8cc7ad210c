#pragma once

#include "cli/report.hpp"

#include "cdgamma/quadrature.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cdgamma::cli {

inline constexpr std::string_view kSuiteNames[] = {"algebra",  "recurrence", "reflection", "duplication",
                                                   "residues", "magnitude",  "prop15",     "thm17"};

struct SuiteOptions {
    std::vector<int> levels;     // empty: the suite's own default
    std::optional<int> samples;  // per level
    std::uint64_t seed = 7;
    std::optional<double> tolerance;
    int nmax = 10;               // residues: poles 0..nmax
    QuadratureConfig quadrature;
    unsigned jobs = 1;
    bool timing = false;
};

bool is_suite(std::string_view name);

/// Runs one named suite; "all" runs every suite in kSuiteNames order.
std::vector<Record> run_suite(std::string_view name, const SuiteOptions& options);

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be written by index.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

} // namespace cdgamma::cli
