#include "cdgamma/quadrature.hpp"

#include "cdgamma/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

namespace cdgamma {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Beyond this abscissa in the transformed variable every node gap underflows.
constexpr double kMaxAbscissa = 6.6;
constexpr int kMinLevel = 3;

class Accumulator {
public:
    explicit Accumulator(int level) : sum_(std::size_t{1} << level, 0.0), level_(level) {}

    void add(const CDNumber& value, double weight) {
        if (value.level() != level_) throw Error(ErrorKind::level_mismatch, "integrand changed level");
        for (std::size_t i = 0; i < sum_.size(); ++i) {
            const double term = weight * value[i];
            if (std::isnan(term)) throw Error(ErrorKind::evaluation, "integrand produced NaN");
            sum_[i] += term;
        }
    }

    const std::vector<double>& sum() const { return sum_; }

private:
    std::vector<double> sum_;
    int level_;
};

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

// A double-exponential rule: nodes x(s) and weights x'(s) on the grid s = k h.
// `node(s)` returns nullopt where the node collapses onto an endpoint.
struct Node {
    IntervalPoint point;
    double weight;
};

template <class NodeFn, class Integrand>
IntegralResult run_levels(NodeFn&& node, Integrand&& f, double s_lo, double s_hi, const QuadratureConfig& cfg,
                          double extra_error) {
    // The level is discovered from the first evaluation.
    int level = -1;
    long evaluations = 0;
    std::vector<double> total;
    std::vector<double> previous;
    double h = 1.0;

    auto evaluate_grid = [&](double step, bool odd_only) {
        std::vector<double> partial;
        std::optional<Accumulator> acc;
        const long k_lo = static_cast<long>(std::ceil(s_lo / step));
        const long k_hi = static_cast<long>(std::floor(s_hi / step));
        for (long k = k_lo; k <= k_hi; ++k) {
            if (odd_only && (k % 2 == 0)) continue;
            const std::optional<Node> n = node(static_cast<double>(k) * step);
            if (!n || n->weight == 0.0) continue;
            CDNumber value = f(n->point);
            ++evaluations;
            if (!acc) {
                if (level < 0) level = value.level();
                acc.emplace(level);
            }
            acc->add(value, n->weight);
        }
        if (acc) partial = acc->sum();
        return partial;
    };

    auto combine = [&](const std::vector<double>& partial) {
        if (partial.empty()) return;
        if (total.empty()) total.assign(partial.size(), 0.0);
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += partial[i];
    };

    // level 0
    combine(evaluate_grid(h, false));
    if (total.empty()) throw Error(ErrorKind::evaluation, "quadrature produced no nodes");
    std::vector<double> estimate = total;
    for (double& x : estimate) x *= h;
    double error = std::numeric_limits<double>::infinity();

    for (int refinement = 1; refinement <= cfg.max_refinements; ++refinement) {
        previous = estimate;
        h /= 2.0;
        combine(evaluate_grid(h, true));
        estimate = total;
        for (double& x : estimate) x *= h;
        error = max_abs_diff(estimate, previous);
        const double target = std::max(cfg.abs_tol, cfg.rel_tol * norm(estimate));
        if (refinement >= kMinLevel && error <= target) {
            return {CDNumber(level, estimate), error + extra_error, evaluations};
        }
    }
    std::ostringstream msg;
    msg << "quadrature did not converge after " << cfg.max_refinements << " refinements (error estimate " << error
        << ", best |value| " << max_abs(estimate) << ")";
    throw AccuracyError(estimate, error + extra_error, msg.str());
}

void check_segment_in_slice(const ContourPoint& p, const PureImaginaryUnit& axis) {
    const CDNumber& m = axis.value();
    const CDNumber pure = p.value.pure();
    const CDNumber off = pure - m * inner(pure, m);
    if (off.norm() > 1e-12 * std::max(1.0, p.value.norm())) {
        throw Error(ErrorKind::invalid_input, "contour leaves the slice plane R + MR");
    }
}

ContourPoint polar_point(const CDNumber& zeta, const PureImaginaryUnit& axis) {
    const double y = inner(zeta.pure(), axis.value());
    return {zeta, zeta.norm(), std::atan2(y, zeta.re())};
}

} // namespace

void QuadratureConfig::validate() const {
    if (!(abs_tol > 0.0)) throw Error(ErrorKind::invalid_input, "abs_tol must be positive");
    if (!(rel_tol >= 0.0)) throw Error(ErrorKind::invalid_input, "rel_tol must be non-negative");
    if (!(truncation_radius > 0.0)) throw Error(ErrorKind::invalid_input, "truncation_radius must be positive");
    if (max_refinements < kMinLevel) {
        throw Error(ErrorKind::invalid_input, "max_refinements must be at least " + std::to_string(kMinLevel));
    }
}

IntegralResult integrate_interval_gapped(const GappedIntegrand& f, double a, double b, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw Error(ErrorKind::invalid_input, "integrate_interval needs finite a < b");
    }
    const double width = b - a;
    auto node = [a, b, width](double s) -> std::optional<Node> {
        // t = (a+b)/2 + (b-a)/2 tanh(pi/2 sinh s); gaps and weight via e = exp(-2|u|)
        const double u = kHalfPi * std::sinh(std::abs(s));
        const double e = std::exp(-2.0 * u);
        const double near_gap = width * e / (1.0 + e);
        if (near_gap == 0.0) return std::nullopt;
        const double far_gap = width / (1.0 + e);
        const double weight = width * std::numbers::pi * std::cosh(s) * e / ((1.0 + e) * (1.0 + e));
        if (s >= 0.0) return Node{{b - near_gap, far_gap, near_gap}, weight};
        return Node{{a + near_gap, near_gap, far_gap}, weight};
    };
    return run_levels(node, f, -kMaxAbscissa, kMaxAbscissa, cfg, 0.0);
}

IntegralResult integrate_interval(const RealIntegrand& f, double a, double b, const QuadratureConfig& cfg) {
    return integrate_interval_gapped([&f](const IntervalPoint& p) { return f(p.t); }, a, b, cfg);
}

IntegralResult integrate_semi_infinite(const RealIntegrand& f, double a, const QuadratureConfig& cfg) {
    cfg.validate();
    if (!std::isfinite(a)) throw Error(ErrorKind::invalid_input, "integrate_semi_infinite needs a finite start");
    const double radius = cfg.truncation_radius;
    // t = a + exp(pi/2 sinh s); the upper node range stops at gap = radius
    const double s_hi = std::asinh(std::log(radius) / kHalfPi);
    auto node = [a](double s) -> std::optional<Node> {
        const double gap = std::exp(kHalfPi * std::sinh(s));
        if (gap == 0.0) return std::nullopt;
        const double weight = kHalfPi * std::cosh(s) * gap;
        return Node{{a + gap, gap, std::numeric_limits<double>::infinity()}, weight};
    };
    const double tail = f(a + radius).norm();
    if (std::isnan(tail)) throw Error(ErrorKind::evaluation, "integrand produced NaN at the truncation point");
    return run_levels(node, [&f](const IntervalPoint& p) { return f(p.t); }, -kMaxAbscissa, s_hi, cfg, tail);
}

Contour Contour::interval(double a, double b, const PureImaginaryUnit& axis) {
    if (!(a < b)) throw Error(ErrorKind::invalid_input, "interval contour needs a < b");
    Contour c(ContourKind::interval, axis);
    const int level = axis.level();
    c.segments_.push_back({a, b,
                           [level, axis](double s) { return polar_point(CDNumber::real(level, s), axis); },
                           [level](double) { return CDNumber::real(level, 1.0); }});
    return c;
}

Contour Contour::semi_infinite(double a, const PureImaginaryUnit& axis) {
    Contour c(ContourKind::semi_infinite, axis);
    const int level = axis.level();
    c.segments_.push_back({a, std::numeric_limits<double>::infinity(),
                           [level, axis](double s) { return polar_point(CDNumber::real(level, s), axis); },
                           [level](double) { return CDNumber::real(level, 1.0); }});
    return c;
}

Contour Contour::circle(const CDNumber& center, double radius, const PureImaginaryUnit& axis) {
    if (!(radius > 0.0)) throw Error(ErrorKind::invalid_input, "circle radius must be positive");
    if (center.level() != axis.level()) throw Error(ErrorKind::level_mismatch, "circle center and axis levels differ");
    check_segment_in_slice({center, center.norm(), 0.0}, axis);
    Contour c(ContourKind::circle, axis);
    const CDNumber m = axis.value();
    c.segments_.push_back({-std::numbers::pi, std::numbers::pi,
                           [center, radius, m, axis](double theta) {
                               CDNumber zeta = center + m * (radius * std::sin(theta)) + radius * std::cos(theta);
                               return polar_point(zeta, axis);
                           },
                           [radius, m](double theta) {
                               // d/dtheta of r e^{theta M} = r M e^{theta M}
                               return m * (radius * std::cos(theta)) - radius * std::sin(theta);
                           }});
    return c;
}

Contour hankel_contour(double delta, double truncation, const PureImaginaryUnit& axis) {
    if (!(delta > 0.0) || !(delta < truncation) || !std::isfinite(truncation)) {
        throw Error(ErrorKind::invalid_input, "hankel_contour needs 0 < delta < R");
    }
    Contour c(ContourKind::hankel_loop, axis);
    c.delta_ = delta;
    c.truncation_ = truncation;
    const int level = axis.level();
    const CDNumber m = axis.value();
    constexpr double pi = std::numbers::pi;
    // lower edge: zeta = s for s in [-R, -delta], phase -pi
    c.segments_.push_back({-truncation, -delta,
                           [level](double s) { return ContourPoint{CDNumber::real(level, s), -s, -pi}; },
                           [level](double) { return CDNumber::real(level, 1.0); }});
    // circle |zeta| = delta, angle from -pi to pi
    c.segments_.push_back({-pi, pi,
                           [delta, m](double theta) {
                               CDNumber zeta = m * (delta * std::sin(theta)) + delta * std::cos(theta);
                               return ContourPoint{std::move(zeta), delta, theta};
                           },
                           [delta, m](double theta) { return m * (delta * std::cos(theta)) - delta * std::sin(theta); }});
    // upper edge: zeta = -s for s in [delta, R], phase +pi
    c.segments_.push_back({delta, truncation,
                           [level](double s) { return ContourPoint{CDNumber::real(level, -s), s, pi}; },
                           [level](double) { return CDNumber::real(level, -1.0); }});
    return c;
}

IntegralResult integrate_contour(const ContourIntegrand& f, const Contour& contour, const QuadratureConfig& cfg) {
    cfg.validate();
    IntegralResult total{CDNumber(contour.axis().level()), 0.0, 0};
    for (const ContourSegment& seg : contour.segments()) {
        // start, middle and a far point; segments are built from the axis, so this catches bad inputs
        const double s_far = std::isinf(seg.s_end) ? seg.s_begin + 1.0 : seg.s_end;
        for (double s : {seg.s_begin, 0.5 * (seg.s_begin + s_far), s_far}) {
            check_segment_in_slice(seg.point(s), contour.axis());
        }
        auto integrand = [&seg, &f](double s) { return f(seg.point(s)) * seg.derivative(s); };
        IntegralResult part = std::isinf(seg.s_end) ? integrate_semi_infinite(integrand, seg.s_begin, cfg)
                                                    : integrate_interval(integrand, seg.s_begin, seg.s_end, cfg);
        total.value += part.value;
        total.error_estimate += part.error_estimate;
        total.evaluations += part.evaluations;
    }
    return total;
}

} // namespace cdgamma
