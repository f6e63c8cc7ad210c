#include "cdgamma/beta.hpp"
#include "cdgamma/elementary.hpp"
#include "cdgamma/sampling.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace cdgamma;
using cdgamma::testing::cd;
using cdgamma::testing::error_kind_of;

namespace {

CDNumber group_log(const CDNumber& u, const CDNumber& v) { return cd_ln(cd_exp(u) * cd_exp(v)); }

// quaternion pair with |u| + |v| < bound, by rejection from the coordinate box
std::pair<CDNumber, CDNumber> small_pair(Sampler& rng, double bound) {
    for (;;) {
        const CDNumber u = rng.cd(2, -bound / 2, bound / 2), v = rng.cd(2, -bound / 2, bound / 2);
        if (u.norm() + v.norm() < bound) return {u, v};
    }
}

} // namespace

TEST(CampbellHausdorff, CommutingInputsAddExactly) {
    const CDNumber u = cd(2, {0.1, 0.2, -0.1, 0.3}), v = cd(2, {-0.05, 0.4, -0.2, 0.6});
    for (int order = 1; order <= 8; ++order) {
        EXPECT_EQ(ch_w(u, v, {.truncation_order = order}), u + v);
    }
    // real parts are central, and large same-slice inputs never reach the series
    EXPECT_EQ(ch_w(CDNumber::real(2, 3.0), cd(2, {0, 2, 2, 2})), cd(2, {3, 2, 2, 2}));
}

TEST(CampbellHausdorff, SecondOrderByHand) {
    const CDNumber u = CDNumber::unit(2, 1, 0.1), v = CDNumber::unit(2, 2, 0.1);
    EXPECT_LE(max_abs_diff(ch_w(u, v, {.truncation_order = 2}), cd(2, {0, 0.1, 0.1, 0.01})), 1e-17);
    EXPECT_LE(max_abs_diff(ch_w(u, v, {.truncation_order = 1}), u + v), 0.0);
}

TEST(CampbellHausdorff, OrderEightAgainstGroupLogarithm) {
    const CDNumber u = cd(2, {0, 0.2, 0, 0.1}), v = CDNumber::unit(2, 2, 0.15);
    EXPECT_LE(max_abs_diff(ch_w(u, v), group_log(u, v)), 1e-8);
}

TEST(CampbellHausdorff, RealPartsSplitOff) {
    const CDNumber u = cd(2, {1.5, 0.2}), v = cd(2, {-0.7, 0, 0.15});
    EXPECT_LE(max_abs_diff(ch_w(u, v), ch_w(u.pure(), v.pure()) + 0.8), 1e-16);
    EXPECT_LE(max_abs_diff(ch_w(u, v), group_log(u, v)), 1e-8);
}

TEST(CampbellHausdorff, Errors) {
    EXPECT_EQ(error_kind_of([] { ch_w(CDNumber::unit(2, 1, 0.5), CDNumber::unit(2, 2, 0.5)); }),
              ErrorKind::convergence_risk);
    EXPECT_EQ(error_kind_of([] { ch_w(CDNumber::unit(2, 1, 0.1), CDNumber::unit(2, 2, 0.1), {.truncation_order = 0}); }),
              ErrorKind::invalid_input);
    // e1 + 0.5 e8 and e2 + e4 + e15 generate a non-associative subalgebra of the sedenions
    const CDNumber a = CDNumber::unit(4, 1, 0.1) + CDNumber::unit(4, 8, 0.05);
    const CDNumber b = (CDNumber::unit(4, 2) + CDNumber::unit(4, 4) + CDNumber::unit(4, 15)) * 0.05;
    EXPECT_EQ(error_kind_of([&] { ch_w(a, b); }), ErrorKind::precondition);
    EXPECT_EQ(error_kind_of([] { ch_w(CDNumber(2), CDNumber(3)); }), ErrorKind::level_mismatch);
}

TEST(CampbellHausdorff, OctonionPairsAreAccepted) {
    // two octonions generate an associative subalgebra, so the series applies
    const CDNumber u = CDNumber::unit(3, 1, 0.1), v = CDNumber::unit(3, 6, 0.12);
    EXPECT_LE(max_abs_diff(ch_w(u, v), group_log(u, v)), 1e-10);
}

// Stated as a universal property. It fails for a few pairs where consecutive degrees
// partially cancel, so dropping one more term makes the remainder slightly larger.
TEST(CampbellHausdorffProperties, ResidualShrinksWithOrder) {
    Sampler rng(90);
    for (int trial = 0; trial < 50; ++trial) {
        const auto [u, v] = small_pair(rng, 0.5);
        const CDNumber exact = group_log(u, v);
        double prev = std::numeric_limits<double>::infinity();
        for (int order = 1; order <= 8; ++order) {
            const double r = max_abs_diff(ch_w(u, v, {.truncation_order = order}), exact);
            // a degree that vanishes identically leaves the residual unchanged up to rounding
            EXPECT_LE(r, prev * (1 + 1e-9) + 1e-15) << "order " << order;
            prev = r;
        }
    }
}

TEST(CampbellHausdorffProperties, TruncationErrorHasTheNextDegree) {
    // scaling u, v by s must scale the order-n remainder by s^{n+1}
    Sampler rng(92);
    for (int trial = 0; trial < 5; ++trial) {
        const CDNumber u = rng.cd(2, -0.25, 0.25).pure(), v = rng.cd(2, -0.25, 0.25).pure();
        for (int order = 1; order <= 7; ++order) {
            auto remainder = [&](double s) {
                return distance(ch_w(u * s, v * s, {.truncation_order = order}), group_log(u * s, v * s));
            };
            const double slope = std::log2(remainder(0.5) / remainder(0.25));
            EXPECT_GT(slope, order + 0.9) << "order " << order;
        }
    }
}

TEST(CampbellHausdorffProperties, GroupInverseSymmetryOfOracle) {
    Sampler rng(91);
    for (int trial = 0; trial < 50; ++trial) {
        const auto [u, v] = small_pair(rng, 0.5);
        EXPECT_LE(max_abs_diff(-group_log(u, v), group_log(-v, -u)), 1e-12);
        EXPECT_LE(max_abs_diff(-ch_w(u, v), ch_w(-v, -u)), 1e-14);
    }
}
