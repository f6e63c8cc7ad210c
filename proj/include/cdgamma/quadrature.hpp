#pragma once

#include "cdgamma/cd_number.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace cdgamma {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_refinements = 12;
    /// Cut-off for semi-infinite ranges and for Hankel rays.
    double truncation_radius = 60.0;

    void validate() const;
};

struct IntegralResult {
    CDNumber value;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// Abscissa together with its exact distances to both interval ends, so that
/// integrands singular at an endpoint never see a rounded 1 - t.
struct IntervalPoint {
    double t;
    double from_lower;
    double to_upper;
};

using RealIntegrand = std::function<CDNumber(double)>;
using GappedIntegrand = std::function<CDNumber(const IntervalPoint&)>;

/// Tanh-sinh quadrature on (a, b). Integrable endpoint singularities need no
/// special treatment. Throws AccuracyError (carrying the best estimate) when the
/// tolerance is not met after max_refinements halvings.
IntegralResult integrate_interval(const RealIntegrand& f, double a, double b, const QuadratureConfig& cfg = {});
IntegralResult integrate_interval_gapped(const GappedIntegrand& f, double a, double b,
                                         const QuadratureConfig& cfg = {});

/// Exp-sinh quadrature on [a, inf), nodes beyond a + truncation_radius dropped.
/// |f(a + R)| is added to the error estimate as the tail bound (the integrand is
/// assumed to decay at least like e^-t).
IntegralResult integrate_semi_infinite(const RealIntegrand& f, double a, const QuadratureConfig& cfg = {});

/// A point on a slice-plane contour with its polar data. The phase is the one
/// the integrand must use for Ln: it is +-pi on the two edges of a branch cut.
struct ContourPoint {
    CDNumber value;
    double modulus;
    double phase;
};

struct ContourSegment {
    double s_begin;
    double s_end;
    std::function<ContourPoint(double)> point;
    std::function<CDNumber(double)> derivative;
};

enum class ContourKind { interval, semi_infinite, hankel_loop, circle };

/// Piecewise smooth path inside one plane R + axis R, positively oriented.
class Contour {
public:
    /// Real segment [a, b] traversed left to right.
    static Contour interval(double a, double b, const PureImaginaryUnit& axis);
    /// Real ray [a, inf) traversed outward; truncated like integrate_semi_infinite.
    static Contour semi_infinite(double a, const PureImaginaryUnit& axis);
    /// Circle of the given radius around a center lying in the slice.
    static Contour circle(const CDNumber& center, double radius, const PureImaginaryUnit& axis);

    ContourKind kind() const noexcept { return kind_; }
    const PureImaginaryUnit& axis() const noexcept { return axis_; }
    const std::vector<ContourSegment>& segments() const noexcept { return segments_; }
    /// Hankel parameters (cut-circle radius, ray truncation); zero otherwise.
    double delta() const noexcept { return delta_; }
    double truncation() const noexcept { return truncation_; }

private:
    friend Contour hankel_contour(double delta, double truncation, const PureImaginaryUnit& axis);
    Contour(ContourKind kind, PureImaginaryUnit axis) : kind_(kind), axis_(std::move(axis)) {}

    ContourKind kind_;
    PureImaginaryUnit axis_;
    std::vector<ContourSegment> segments_;
    double delta_ = 0.0;
    double truncation_ = 0.0;
};

/// Loop from -R below the cut (phase -pi) to -delta, around |zeta| = delta from
/// angle -pi to pi, and back out to -R above the cut (phase +pi).
Contour hankel_contour(double delta, double truncation, const PureImaginaryUnit& axis);

using ContourIntegrand = std::function<CDNumber(const ContourPoint&)>;

/// Sum over segments of the integral of f(zeta(s)) zeta'(s) ds, the product taken
/// in that order. Rejects contours whose points leave the plane R + axis R.
IntegralResult integrate_contour(const ContourIntegrand& f, const Contour& contour, const QuadratureConfig& cfg = {});

} // namespace cdgamma
