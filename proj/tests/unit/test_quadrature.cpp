#include "cdgamma/elementary.hpp"
#include "cdgamma/gamma.hpp"
#include "cdgamma/quadrature.hpp"
#include "cdgamma/sampling.hpp"
#include "test_support.hpp"

#include <cmath>
#include <limits>
#include <numbers>

using namespace cdgamma;
using cdgamma::testing::cd;
using cdgamma::testing::error_kind_of;
using cdgamma::testing::from_complex;
using std::numbers::pi;

namespace {

// Frozen 30-digit reference for the upper incomplete integral over [1, inf) at z = 2 + i.
const std::complex<double> kPsiTwoPlusI(0.46162823822661892942, 0.46704598016131653141);

RealIntegrand real_fn(int level, double (*f)(double)) {
    return [level, f](double t) { return CDNumber::real(level, f(t)); };
}

} // namespace

TEST(Quadrature, ConfigValidation) {
    EXPECT_NO_THROW(QuadratureConfig{}.validate());
    EXPECT_EQ(error_kind_of([] { QuadratureConfig{.abs_tol = 0.0}.validate(); }), ErrorKind::invalid_input);
    EXPECT_EQ(error_kind_of([] { QuadratureConfig{.rel_tol = -1.0}.validate(); }), ErrorKind::invalid_input);
    EXPECT_EQ(error_kind_of([] { QuadratureConfig{.truncation_radius = 0.0}.validate(); }), ErrorKind::invalid_input);
}

TEST(Quadrature, IntervalExamples) {
    IntegralResult r = integrate_interval([](double t) { return CDNumber::real(2, t); }, 0, 1);
    EXPECT_NEAR(r.value.re(), 0.5, 1e-14);
    EXPECT_GE(r.error_estimate, 0.0);
    EXPECT_GT(r.evaluations, 0);

    r = integrate_interval_gapped(
        [](const IntervalPoint& p) { return CDNumber::real(2, 1.0 / std::sqrt(p.from_lower * p.to_upper)); }, 0, 1);
    EXPECT_NEAR(r.value.re(), pi, 1e-11);

    // t^{e1} integrates to (1 - e1) / 2
    const CDNumber e1 = CDNumber::unit(2, 1);
    r = integrate_interval([&](double t) { return real_power(t, e1); }, 0, 1);
    EXPECT_LE(max_abs_diff(r.value, cd(2, {0.5, -0.5})), 1e-11);
}

TEST(Quadrature, IntervalErrors) {
    EXPECT_EQ(error_kind_of([] { integrate_interval(real_fn(2, [](double t) { return t; }), 1, 0); }),
              ErrorKind::invalid_input);
    EXPECT_EQ(error_kind_of([] {
                  integrate_interval(real_fn(2, [](double) { return std::numeric_limits<double>::quiet_NaN(); }), 0, 1);
              }),
              ErrorKind::evaluation);
    // cusp interior to the interval, demanded beyond double resolution with only three levels
    QuadratureConfig tight{.abs_tol = 1e-300, .rel_tol = 0.0, .max_refinements = 3};
    try {
        integrate_interval(real_fn(2, [](double t) { return std::abs(t - 0.3); }), 0, 1, tight);
        ADD_FAILURE() << "expected an accuracy failure";
    } catch (const AccuracyError& e) {
        ASSERT_EQ(e.best_estimate().size(), 4u);
        EXPECT_NEAR(e.best_estimate()[0], 0.29, 1e-2);
        EXPECT_GT(e.error_estimate(), 0.0);
    }
}

TEST(Quadrature, SemiInfiniteExamples) {
    EXPECT_NEAR(integrate_semi_infinite(real_fn(2, [](double t) { return std::exp(-t); }), 0).value.re(), 1.0, 1e-12);
    EXPECT_NEAR(integrate_semi_infinite(real_fn(2, [](double t) { return std::exp(-t) * t * t * t; }), 0).value.re(),
                6.0, 1e-11);
}

TEST(Quadrature, UpperIncompleteGammaMatchesOracleAndSeriesSplit) {
    const CDNumber z = cd(2, {2, 0, 1});
    const CDNumber zm1 = z - 1.0;
    const IntegralResult psi =
        integrate_semi_infinite([&](double t) { return real_power(t, zm1) * std::exp(-t); }, 1.0);
    EXPECT_LE(max_abs_diff(psi.value, cd(2, {kPsiTwoPlusI.real(), 0, kPsiTwoPlusI.imag()})), 1e-11);

    // Gamma(z) - sum (-1)^n / (n! (z + n)) over the first 40 terms
    CDNumber phi(2);
    double factorial = 1.0;
    for (int n = 0; n < 40; ++n) {
        if (n > 0) factorial *= n;
        phi += cd_inverse(z + static_cast<double>(n)) * ((n % 2 == 0 ? 1.0 : -1.0) / factorial);
    }
    EXPECT_LE(max_abs_diff(psi.value, gamma(z) - phi), 1e-11);
}

TEST(Contour, CircleExamples) {
    const PureImaginaryUnit e1 = PureImaginaryUnit::basis(2, 1);
    const Contour unit = Contour::circle(CDNumber(2), 1.0, e1);
    const IntegralResult r = integrate_contour([](const ContourPoint& p) { return cd_inverse(p.value); }, unit);
    EXPECT_LE(max_abs_diff(r.value, CDNumber::unit(2, 1, 2 * pi)), 1e-12);

    const Contour off = Contour::circle(cd(2, {0.3, -0.2}), 2.0, e1);
    EXPECT_LE(integrate_contour([](const ContourPoint& p) { return p.value; }, off).value.norm(), 1e-12);
    EXPECT_LE(integrate_contour([](const ContourPoint& p) { return cd_inverse(p.value * p.value); }, unit).value.norm(),
              1e-12);
}

TEST(Contour, IntervalAndRayKinds) {
    const PureImaginaryUnit m = PureImaginaryUnit::basis(3, 5);
    const IntegralResult seg = integrate_contour([](const ContourPoint& p) { return p.value; }, Contour::interval(0, 2, m));
    EXPECT_NEAR(seg.value.re(), 2.0, 1e-13);
    const IntegralResult ray = integrate_contour(
        [](const ContourPoint& p) { return CDNumber::real(3, std::exp(-p.value.re())); }, Contour::semi_infinite(0, m));
    EXPECT_NEAR(ray.value.re(), 1.0, 1e-12);
    EXPECT_EQ(Contour::semi_infinite(0, m).kind(), ContourKind::semi_infinite);
}

TEST(Contour, OffSliceCircleIsRejected) {
    const PureImaginaryUnit e1 = PureImaginaryUnit::basis(2, 1);
    EXPECT_EQ(error_kind_of([&] { Contour::circle(CDNumber::unit(2, 2), 1.0, e1); }), ErrorKind::invalid_input);
}

TEST(HankelContour, Construction) {
    const PureImaginaryUnit m = PureImaginaryUnit::basis(2, 3);
    const double delta = 0.5, big_r = 20.0;
    const Contour c = hankel_contour(delta, big_r, m);
    ASSERT_EQ(c.segments().size(), 3u);
    EXPECT_EQ(c.kind(), ContourKind::hankel_loop);
    EXPECT_EQ(c.delta(), delta);
    EXPECT_EQ(c.truncation(), big_r);

    const ContourSegment& lower = c.segments()[0];
    const ContourPoint start = lower.point(lower.s_begin), stop = lower.point(lower.s_end);
    EXPECT_LE(max_abs_diff(start.value, CDNumber::real(2, -big_r)), 1e-15);
    EXPECT_EQ(start.phase, -pi);
    EXPECT_LE(max_abs_diff(stop.value, CDNumber::real(2, -delta)), 1e-15);
    EXPECT_EQ(stop.phase, -pi);

    const ContourSegment& circle = c.segments()[1];
    const ContourPoint mid = circle.point(0.5 * (circle.s_begin + circle.s_end));
    EXPECT_LE(max_abs_diff(mid.value, CDNumber::real(2, delta)), 1e-15);

    const ContourSegment& upper = c.segments()[2];
    EXPECT_EQ(upper.point(upper.s_begin).phase, pi);
    EXPECT_LE(max_abs_diff(upper.point(upper.s_end).value, CDNumber::real(2, -big_r)), 1e-15);

    const IntegralResult winding = integrate_contour([](const ContourPoint& p) { return cd_inverse(p.value); }, c);
    EXPECT_LE(max_abs_diff(winding.value, m.value() * (2 * pi)), 1e-12);

    EXPECT_EQ(error_kind_of([&] { hankel_contour(0.0, 1.0, m); }), ErrorKind::invalid_input);
    EXPECT_EQ(error_kind_of([&] { hankel_contour(2.0, 1.0, m); }), ErrorKind::invalid_input);
}

TEST(QuadratureProperties, Linearity) {
    Sampler rng(40);
    for (int trial = 0; trial < 10; ++trial) {
        const CDNumber alpha = rng.cd(2, -2, 2), beta = rng.cd(2, -2, 2);
        const double a = rng.uniform(0.5, 3.0);
        const CDNumber sa = CDNumber::real(2, a);
        auto f = [&](double t) { return alpha * std::sin(a * t); };
        auto g = [&](double t) { return beta * std::exp(-t * t); };
        const IntegralResult rf = integrate_interval(f, 0, 2), rg = integrate_interval(g, 0, 2);
        const IntegralResult rsum = integrate_interval([&](double t) { return sa * f(t) + g(t); }, 0, 2);
        EXPECT_LE(max_abs_diff(rsum.value, sa * rf.value + rg.value), 1e-11);
    }
}

TEST(QuadratureProperties, ModulusInequality) {
    Sampler rng(41);
    for (int level = 2; level <= 4; ++level) {
        const CDNumber c0 = rng.cd(level, -1, 1), c1 = rng.cd(level, -1, 1);
        auto f = [&](double t) { return c0 * std::cos(3 * t) + c1 * t; };
        const double lhs = integrate_interval(f, 0, 2).value.norm();
        const double rhs = integrate_interval([&](double t) { return CDNumber::real(level, f(t).norm()); }, 0, 2).value.re();
        EXPECT_LE(lhs, rhs + 1e-12);
    }
}

TEST(QuadratureProperties, HankelDeformationInvariance) {
    Sampler rng(42);
    for (int level = 2; level <= 4; ++level) {
        const PureImaginaryUnit m = rng.axis(level);
        const CDNumber z = from_complex({0.7, 0.9}, m);
        // e^zeta zeta^{-z} on the loop, logarithm taken from the recorded phase
        auto integrand = [&](const ContourPoint& p) {
            const CDNumber log_zeta = from_complex({std::log(p.modulus), p.phase}, m);
            return cd_exp(p.value - z * log_zeta);
        };
        QuadratureConfig cfg;
        const CDNumber a = integrate_contour(integrand, hankel_contour(0.25, 30, m), cfg).value;
        const CDNumber b = integrate_contour(integrand, hankel_contour(0.5, 40, m), cfg).value;
        EXPECT_LE(max_abs_diff(a, b), 1e-10);
    }
}

TEST(QuadratureProperties, SliceConfinement) {
    Sampler rng(43);
    for (int level = 2; level <= 5; ++level) {
        const PureImaginaryUnit m = rng.axis(level);
        const CDNumber w = from_complex({0.4, 1.3}, m);
        const CDNumber v = integrate_interval([&](double t) { return real_power(t, w); }, 0.1, 3).value;
        const CDNumber off = v.pure() - m.value() * inner(v.pure(), m.value());
        EXPECT_LT(off.norm(), 1e-12);
    }
}
