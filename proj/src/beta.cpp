#include "cdgamma/beta.hpp"

#include "cdgamma/elementary.hpp"
#include "cdgamma/errors.hpp"
#include "cdgamma/gamma.hpp"

#include <cmath>
#include <sstream>

namespace cdgamma {

namespace {

void check_beta_domain(const CDNumber& p, const CDNumber& q) {
    if (p.level() != q.level()) throw Error(ErrorKind::level_mismatch, "beta: p and q have different levels");
    if (!(p.re() > 0.0) || !(q.re() > 0.0)) {
        throw Error(ErrorKind::domain, "the Beta integral needs Re p > 0 and Re q > 0");
    }
}

double requested_tolerance(const CDNumber& value, const QuadratureConfig& cfg) {
    return std::max(cfg.abs_tol, cfg.rel_tol * value.norm());
}

} // namespace

BetaArgs BetaArgs::make(const CDNumber& p, const CDNumber& q) {
    if (p.level() != q.level()) throw Error(ErrorKind::level_mismatch, "BetaArgs: p and q have different levels");
    CDNumber p_prime = p.pure();
    CDNumber q_prime = q.pure();
    OrthoDecomposition d = ortho_decompose(q_prime, p_prime);
    return {p, q, p.re(), q.re(), std::move(p_prime), std::move(q_prime), std::move(d)};
}

IntegralResult beta_detailed(const CDNumber& p, const CDNumber& q, const QuadratureConfig& cfg) {
    check_beta_domain(p, q);
    const CDNumber a = p - 1.0;
    const CDNumber b = q - 1.0;
    return integrate_interval_gapped(
        [&a, &b](const IntervalPoint& x) { return real_power(x.from_lower, a) * real_power(x.to_upper, b); }, 0.0,
        1.0, cfg);
}

CDNumber beta(const CDNumber& p, const CDNumber& q, const QuadratureConfig& cfg) {
    return beta_detailed(p, q, cfg).value;
}

CDNumber beta_commutator_lhs(const CDNumber& p, const CDNumber& q, const QuadratureConfig& cfg) {
    return beta(p, q, cfg) - beta(q, p, cfg);
}

namespace {

struct CommutatorParts {
    CDNumber bracket;
    CDNumber factor;
    double tolerance;
};

CommutatorParts commutator_parts(const CDNumber& p, const CDNumber& q, const QuadratureConfig& cfg) {
    const BetaArgs args = BetaArgs::make(p, q);
    const CDNumber pr = args.p_reflected();
    const CDNumber qr = args.q_reflected();
    const CDNumber b1 = beta(p, q, cfg);
    const CDNumber b2 = beta(p, qr, cfg);
    const CDNumber b3 = beta(pr, q, cfg);
    const CDNumber b4 = beta(pr, qr, cfg);
    CDNumber factor = cd_conj(args.q_prime) * args.decomposition.perpendicular / 2.0;
    const double tol = requested_tolerance(b1, cfg) + requested_tolerance(b2, cfg) + requested_tolerance(b3, cfg) +
                       requested_tolerance(b4, cfg);
    return {b1 - b2 - b3 + b4, std::move(factor), tol};
}

} // namespace

CDNumber beta_commutator_rhs(const CDNumber& p, const CDNumber& q, const QuadratureConfig& cfg,
                             CorrectionPlacement placement) {
    const CommutatorParts parts = commutator_parts(p, q, cfg);
    return placement == CorrectionPlacement::right ? parts.bracket * parts.factor : parts.factor * parts.bracket;
}

bool generates_associative_subalgebra(const CDNumber& a, const CDNumber& b, double tol) {
    if (a.level() != b.level()) throw Error(ErrorKind::level_mismatch, "operand levels differ");
    if (a.level() <= 2) return true;
    const CDNumber x = a.pure();
    const CDNumber y = b.pure();
    const CDNumber gens[] = {x, y, x * y};
    for (const CDNumber& g1 : gens) {
        for (const CDNumber& g2 : gens) {
            for (const CDNumber& g3 : gens) {
                const double scale = g1.norm() * g2.norm() * g3.norm();
                if (scale == 0.0) continue;
                if (associator(g1, g2, g3).norm() > tol * scale) return false;
            }
        }
    }
    return true;
}

bool embeds_in_octonions(const CDNumber& p, const CDNumber& q, double tol) {
    if (p.level() != q.level()) throw Error(ErrorKind::level_mismatch, "operand levels differ");
    if (p.level() <= 3) return true;
    const BetaArgs args = BetaArgs::make(p, q);
    const CDNumber& x = args.p_prime;
    const CDNumber& y = args.q_prime;
    const CDNumber& y2 = args.decomposition.perpendicular;
    auto small = [tol](const CDNumber& v, double scale) { return v.norm() <= tol * scale; };
    const double sx = x.norm();
    const double sy = y.norm();
    return small(associator(x, y, y2), sx * sy * y2.norm()) && small(associator(x, x, y), sx * sx * sy) &&
           small(associator(y, y, x), sy * sy * sx) && small(associator(x, y, y), sx * sy * sy);
}

IdentityReport beta_commutator_check(const CDNumber& p, const CDNumber& q, const QuadratureConfig& cfg,
                                     CorrectionPlacement placement) {
    check_beta_domain(p, q);
    if (!embeds_in_octonions(p, q)) {
        throw Error(ErrorKind::precondition, "the subalgebra generated by p and q does not embed in the octonions");
    }
    const IntegralResult bpq = beta_detailed(p, q, cfg);
    const IntegralResult bqp = beta_detailed(q, p, cfg);
    CDNumber lhs = bpq.value - bqp.value;
    const CommutatorParts parts = commutator_parts(p, q, cfg);
    CDNumber right = parts.bracket * parts.factor;
    CDNumber left = parts.factor * parts.bracket;
    const double q_norm_sq = q.pure().norm_sq();
    CDNumber normalized = q_norm_sq > 0.0 ? right / q_norm_sq : right;

    const double combined = requested_tolerance(bpq.value, cfg) + requested_tolerance(bqp.value, cfg) +
                            parts.factor.norm() * parts.tolerance;
    std::ostringstream notes;
    notes << "B(p,q) - B(q,p) vs four-Beta bracket times (q')^* q'_2 / 2 on the "
          << (placement == CorrectionPlacement::right ? "right" : "left") << "; tanh-sinh quadrature";
    IdentityReport report = make_report(std::move(lhs), placement == CorrectionPlacement::right ? right : left,
                                        10.0 * combined, notes.str());
    report.diagnostics.emplace_back("rhs_left", std::move(left));
    report.diagnostics.emplace_back("rhs_right", std::move(right));
    report.diagnostics.emplace_back("rhs_unit_normalized", std::move(normalized));
    report.diagnostics.emplace_back("bracket", parts.bracket);
    report.diagnostics.emplace_back("factor", parts.factor);
    return report;
}

} // namespace cdgamma
