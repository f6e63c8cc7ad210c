#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdgamma {

enum class ErrorKind {
    invalid_input,
    level_mismatch,
    singular,
    zero_divisor,
    branch_cut,
    domain,
    pole,
    representation,
    accuracy,
    evaluation,
    parse,
    precondition,
    convergence_risk,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base class for every failure raised by the library. The kind lets callers
/// (the CLI in particular) map failures onto exit codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Argument too close to a pole of Gamma; carries the offending pole -n.
class PoleError : public Error {
public:
    PoleError(int pole, const std::string& what) : Error(ErrorKind::pole, what), pole_(pole) {}
    int pole() const noexcept { return pole_; }

private:
    int pole_;
};

/// Quadrature did not reach the requested accuracy; the best estimate is kept.
class AccuracyError : public Error {
public:
    AccuracyError(std::vector<double> best, double error_estimate, const std::string& what)
        : Error(ErrorKind::accuracy, what), best_(std::move(best)), error_estimate_(error_estimate) {}
    const std::vector<double>& best_estimate() const noexcept { return best_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    std::vector<double> best_;
    double error_estimate_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(ErrorKind::parse, what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace cdgamma
