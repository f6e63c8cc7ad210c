#pragma once

#include "cdgamma/cd_number.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cdgamma::cli {

enum class OutputFormat { json, csv, text };

/// One report row. Every number is tagged with the method that produced it.
struct Record {
    std::string suite;
    std::string input;
    std::string method;
    std::vector<double> value;
    double residual = 0.0;      // NaN when no residual applies
    double tolerance = 0.0;     // NaN when nothing is asserted
    double error_estimate = 0.0;
    bool asserted = false;
    bool passed = true;
    std::string note;
    std::string config_hash;
    std::vector<std::pair<std::string, double>> diagnostics;
    std::optional<double> seconds;
};

struct Report {
    std::string command;
    std::string subject; // suite, function or sweep kind
    std::optional<std::uint64_t> seed;
    std::vector<std::pair<std::string, std::string>> config; // ordered, hashed
    std::vector<Record> records;

    std::string config_hash() const;
    int failures() const;
    int asserted_count() const;
    double max_asserted_residual() const;
};

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

std::vector<double> coords_of(const CDNumber& z);

void write_report(const Report& report, OutputFormat format, std::ostream& out);

} // namespace cdgamma::cli
