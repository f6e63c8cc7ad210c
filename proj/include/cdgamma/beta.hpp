#pragma once

#include "cdgamma/cd_number.hpp"
#include "cdgamma/identity.hpp"
#include "cdgamma/quadrature.hpp"

#include <cmath>

namespace cdgamma {

/// p = p0 + p', q = q0 + q', with q' split against p'.
struct BetaArgs {
    CDNumber p;
    CDNumber q;
    double p0;
    double q0;
    CDNumber p_prime;
    CDNumber q_prime;
    OrthoDecomposition decomposition; // q'_1 = parallel, q'_2 = perpendicular

    static BetaArgs make(const CDNumber& p, const CDNumber& q);
    /// p0 - p' (the conjugate of p)
    CDNumber p_reflected() const { return cd_conj(p); }
    /// q0 - q'
    CDNumber q_reflected() const { return cd_conj(q); }
};

/// Integral over (0, 1) of t^{p-1} (1-t)^{q-1}, left factor first. Re p, Re q > 0.
IntegralResult beta_detailed(const CDNumber& p, const CDNumber& q, const QuadratureConfig& cfg = {});
CDNumber beta(const CDNumber& p, const CDNumber& q, const QuadratureConfig& cfg = {});

/// Where the factor (q')^* q'_2 / 2 multiplies the four-Beta bracket.
enum class CorrectionPlacement { right, left };

/// B(p,q) - B(q,p) by direct quadrature of both orders.
CDNumber beta_commutator_lhs(const CDNumber& p, const CDNumber& q, const QuadratureConfig& cfg = {});

/// [B(p,q) - B(p,q0-q') - B(p0-p',q) + B(p0-p',q0-q')] (q')^* q'_2 / 2.
CDNumber beta_commutator_rhs(const CDNumber& p, const CDNumber& q, const QuadratureConfig& cfg = {},
                             CorrectionPlacement placement = CorrectionPlacement::right);

/// Compares both sides of the commutator identity. The tolerance is
/// 10 x (sum of the six quadrature error estimates, floored at 10 abs_tol).
/// Diagnostics: "rhs_left" (factor on the left), "rhs_unit_normalized"
/// (factor divided by |q'|^2), "bracket", "factor".
IdentityReport beta_commutator_check(const CDNumber& p, const CDNumber& q, const QuadratureConfig& cfg = {},
                                     CorrectionPlacement placement = CorrectionPlacement::right);

/// The subalgebra generated by the pure parts is associative (embeds in H):
/// associators among a', b', a'b' vanish to tol relative to their scale.
bool generates_associative_subalgebra(const CDNumber& a, const CDNumber& b, double tol = 1e-10);

/// Octonion-embeddability test used by the commutator identity: level <= 3, or
/// the associator (p', q', q'_2) and the alternative laws on p', q' hold to tol.
bool embeds_in_octonions(const CDNumber& p, const CDNumber& q, double tol = 1e-10);

struct CHConfig {
    /// Highest total degree of the nested brackets kept.
    int truncation_order = 8;
    /// Largest |u'| + |v'| (pure parts) accepted.
    double norm_guard = std::log(2.0);
};

/// Truncated Campbell-Hausdorff series w(u, v) with Ln(e^u e^v) = w, built from
/// nested commutators in the Dynkin form. Real parts are central and split off
/// exactly; commuting inputs return u + v.
CDNumber ch_w(const CDNumber& u, const CDNumber& v, const CHConfig& cfg = {});

struct Thm17Config {
    QuadratureConfig quadrature;
    CHConfig ch;
    double tolerance = 1e-9;
};

/// Gamma(p) Gamma(q) against
/// Gamma(w) B(p,q) - [Gamma(w) - Gamma(w(p, q0-q'))] (q')^* q'_2 [B(p,q) - B(p0-p',q)] / 2
/// with w = ch_w(p, q). Only the commutative case (p, q in one slice) is asserted.
IdentityReport thm17_check(const CDNumber& p, const CDNumber& q, const Thm17Config& cfg = {});

} // namespace cdgamma
