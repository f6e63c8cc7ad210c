#include "cdgamma/elementary.hpp"
#include "cdgamma/sampling.hpp"
#include "test_support.hpp"

#include <cmath>
#include <complex>
#include <numbers>

using namespace cdgamma;
using cdgamma::testing::cd;
using cdgamma::testing::error_kind_of;
using cdgamma::testing::from_complex;
using std::numbers::pi;

TEST(SliceFrame, DecomposeExamples) {
    SliceFrame f = slice_decompose(cd(2, {1, 1, 1, 1}));
    EXPECT_EQ(f.real_part, 1.0);
    EXPECT_NEAR(f.radius, std::sqrt(3.0), 1e-15);
    EXPECT_LE(max_abs_diff(f.axis.value(), cd(2, {0, 1, 1, 1}) / std::sqrt(3.0)), 1e-16);

    f = slice_decompose(CDNumber::real(3, 5.0));
    EXPECT_EQ(f.real_part, 5.0);
    EXPECT_EQ(f.radius, 0.0);
    EXPECT_EQ(f.axis.value(), CDNumber::unit(3, 1));

    f = slice_decompose(CDNumber::unit(2, 2, -2.0));
    EXPECT_EQ(f.real_part, 0.0);
    EXPECT_EQ(f.radius, 2.0);
    EXPECT_EQ(f.axis.value(), CDNumber::unit(2, 2, -1.0));
}

TEST(SliceFrame, RecomposeReproducesInput) {
    Sampler rng(1);
    for (int level = 1; level <= 6; ++level) {
        const CDNumber z = rng.cd(level, -3, 3);
        const SliceFrame f = slice_decompose(z);
        EXPECT_LE(max_abs_diff(f.recompose(), z), 1e-14);
        EXPECT_NEAR(f.radius, z.pure_norm(), 1e-15);
    }
}

TEST(Exp, Examples) {
    Sampler rng(2);
    for (int level = 2; level <= 4; ++level) {
        const PureImaginaryUnit m = rng.axis(level);
        EXPECT_LE(max_abs_diff(cd_exp(m.value() * pi), CDNumber::real(level, -1.0)), 1e-15);
        const CDNumber pure = rng.cd(level, -2, 2).pure();
        EXPECT_NEAR(cd_exp(pure + 0.7).norm(), std::exp(0.7), 1e-14);
    }
    EXPECT_EQ(cd_exp(CDNumber(2)), CDNumber::real(2, 1.0));
}

TEST(Ln, Examples) {
    EXPECT_LE(max_abs_diff(cd_ln(CDNumber::real(2, std::numbers::e)), CDNumber::real(2, 1.0)), 1e-16);
    EXPECT_LE(max_abs_diff(cd_ln(CDNumber::unit(2, 1)), CDNumber::unit(2, 1, pi / 2)), 1e-16);
    const CDNumber z = cd(3, {0.3, 0, 0.4, 0, 0, 1.2});
    EXPECT_LE(max_abs_diff(cd_ln(cd_exp(z)), z), 1e-15);
}

TEST(Ln, Errors) {
    EXPECT_EQ(error_kind_of([] { cd_ln(CDNumber(2)); }), ErrorKind::singular);
    EXPECT_EQ(error_kind_of([] { cd_ln(CDNumber::real(2, -1.0)); }), ErrorKind::branch_cut);
    EXPECT_EQ(error_kind_of([] { cd_ln(cd(2, {-1, 1e-14})); }), ErrorKind::branch_cut);
    EXPECT_NO_THROW(cd_ln(cd(2, {-1, 1e-6})));
}

TEST(RealPower, Examples) {
    EXPECT_LE(max_abs_diff(real_power(2.0, CDNumber::real(2, 1.0)), CDNumber::real(2, 2.0)), 1e-15);
    const std::complex<double> two_i = std::pow(2.0, std::complex<double>(0, 1));
    EXPECT_LE(max_abs_diff(real_power(2.0, CDNumber::unit(2, 1)), cd(2, {two_i.real(), two_i.imag()})), 1e-16);
    EXPECT_EQ(error_kind_of([] { real_power(0.0, CDNumber::unit(2, 1)); }), ErrorKind::domain);
    EXPECT_EQ(error_kind_of([] { real_power(-2.0, CDNumber::unit(2, 1)); }), ErrorKind::domain);
}

TEST(RealPower, ExponentAdditionOnlyWithinASlice) {
    const double t = 1.7;
    const CDNumber p = cd(2, {0.5, 1.0}), q = cd(2, {0.2, 0.0, 0.8});
    const double residual = distance(real_power(t, p) * real_power(t, q), real_power(t, p + q));
    EXPECT_GT(residual, 1e-3);

    const CDNumber q_same = cd(2, {0.2, -2.0});
    EXPECT_LE(distance(real_power(t, p) * real_power(t, q_same), real_power(t, p + q_same)), 1e-15);
}

TEST(Power, Examples) {
    EXPECT_LE(max_abs_diff(cd_power(CDNumber::unit(2, 1), CDNumber::real(2, 2.0)), CDNumber::real(2, -1.0)), 1e-15);
    EXPECT_LE(max_abs_diff(cd_power(CDNumber::real(2, 4.0), CDNumber::real(2, 0.5)), CDNumber::real(2, 2.0)), 1e-15);
    const std::complex<double> w = std::pow(std::complex<double>(1, 1), std::complex<double>(1, 1));
    const CDNumber z = cd(2, {1, 0, 0, 1});
    EXPECT_LE(max_abs_diff(cd_power(z, z), cd(2, {w.real(), 0, 0, w.imag()})), 1e-15);
    EXPECT_EQ(error_kind_of([] { cd_power(CDNumber::unit(2, 1), CDNumber::unit(2, 2)); }), ErrorKind::invalid_input);
    EXPECT_EQ(error_kind_of([] { cd_power(CDNumber::real(2, -4.0), CDNumber::real(2, 0.5)); }),
              ErrorKind::branch_cut);
}

TEST(Sine, Examples) {
    EXPECT_EQ(cd_sin(CDNumber::real(2, pi / 2)), CDNumber::real(2, 1.0));
    EXPECT_LE(cd_sin(CDNumber::real(2, pi)).norm(), 1e-15);
    const std::complex<double> s = std::sin(std::complex<double>(1, 1));
    EXPECT_LE(max_abs_diff(cd_sin(cd(2, {1, 0, 1})), cd(2, {s.real(), 0, s.imag()})), 1e-15);
}

TEST(Cosecant, PolesAndValues) {
    for (int n : {-3, 0, 2}) {
        try {
            cd_csc(CDNumber::real(2, n));
            ADD_FAILURE() << "expected a pole at " << n;
        } catch (const PoleError& e) {
            EXPECT_EQ(e.pole(), n);
        }
    }
    const CDNumber z = cd(3, {0.3, 0, 0, 0, 0.4});
    EXPECT_LE(max_abs_diff(cd_csc(z) * cd_sin(z), CDNumber::real(3, 1.0)), 1e-14);
}

TEST(ShareSlice, Classification) {
    EXPECT_TRUE(share_slice(cd(2, {1, 1, 1}), cd(2, {-3, 2, 2})));
    EXPECT_TRUE(share_slice(CDNumber::real(2, 2.0), cd(2, {0, 1, 2, 3})));
    EXPECT_FALSE(share_slice(cd(2, {1, 1}), cd(2, {1, 0, 1})));
}

TEST(ElementaryProperties, SliceLiftConsistency) {
    Sampler rng(7);
    for (int level = 2; level <= 5; ++level) {
        for (int trial = 0; trial < 20; ++trial) {
            const PureImaginaryUnit m = rng.axis(level);
            const std::complex<double> w(rng.uniform(-3, 3), rng.uniform(-3, 3));
            const CDNumber z = from_complex(w, m);
            EXPECT_LE(max_abs_diff(cd_exp(z), from_complex(std::exp(w), m)), 1e-13);
            EXPECT_LE(max_abs_diff(cd_ln(z), from_complex(std::log(w), m)), 1e-13);
            EXPECT_LE(max_abs_diff(cd_sin(z), from_complex(std::sin(w), m)), 1e-13);
            EXPECT_LE(max_abs_diff(real_power(2.5, z), from_complex(std::pow(2.5, w), m)), 1e-13);
        }
    }
}

TEST(ElementaryProperties, ExpAdditionWithinSlice) {
    Sampler rng(8);
    for (int level = 2; level <= 4; ++level) {
        const PureImaginaryUnit m = rng.axis(level);
        const CDNumber z = rng.on_random_slice(level, 0, 0) + from_complex({0.3, -1.2}, m);
        const CDNumber w = from_complex({-0.8, 2.1}, m);
        EXPECT_LE(max_abs_diff(cd_exp(z + w), cd_exp(z) * cd_exp(w)), 1e-13);
    }
}

TEST(ElementaryProperties, LnExpRoundTrip) {
    Sampler rng(9);
    for (int level = 1; level <= 5; ++level) {
        for (int trial = 0; trial < 30; ++trial) {
            const CDNumber z = rng.on_random_slice(level, rng.uniform(-3, 3), rng.uniform(0, pi - 1e-6));
            EXPECT_LE(max_abs_diff(cd_ln(cd_exp(z)), z), 1e-12);
        }
    }
}

TEST(ElementaryProperties, ExpModulusIsAxisIndependent) {
    Sampler rng(10);
    for (int level = 2; level <= 4; ++level) {
        for (int trial = 0; trial < 10; ++trial) {
            EXPECT_NEAR(cd_exp(rng.on_random_slice(level, 1.3, 2.7)).norm(), std::exp(1.3), 1e-14);
        }
    }
}

TEST(ElementaryProperties, RealInputsAreAxisIndependent) {
    // a real argument gives a real value, so the conventional e1 axis never leaks out
    EXPECT_TRUE(cd_ln(CDNumber::real(3, 2.0)).is_real());
    EXPECT_TRUE(cd_exp(CDNumber::real(3, 2.0)).is_real());
    EXPECT_TRUE(cd_power(CDNumber::real(3, 2.0), CDNumber::real(3, 0.3)).is_real());
    EXPECT_TRUE(cd_sin(CDNumber::real(3, 2.0)).is_real());
}
