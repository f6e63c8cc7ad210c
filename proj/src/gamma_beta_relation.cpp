#include "cdgamma/beta.hpp"
#include "cdgamma/elementary.hpp"
#include "cdgamma/errors.hpp"
#include "cdgamma/gamma.hpp"

namespace cdgamma {

IdentityReport thm17_check(const CDNumber& p, const CDNumber& q, const Thm17Config& cfg) {
    if (p.level() != q.level()) throw Error(ErrorKind::level_mismatch, "thm17_check: p and q have different levels");
    if (!(p.re() > 0.0) || !(q.re() > 0.0)) throw Error(ErrorKind::domain, "thm17_check needs Re p > 0 and Re q > 0");
    if (!generates_associative_subalgebra(p, q)) {
        throw Error(ErrorKind::precondition, "the subalgebra generated by p and q does not embed in the quaternions");
    }
    const BetaArgs args = BetaArgs::make(p, q);
    const bool commutative = share_slice(p, q);

    const CDNumber w = ch_w(p, q, cfg.ch);
    const CDNumber w_reflected = ch_w(p, args.q_reflected(), cfg.ch);
    const CDNumber gamma_w = gamma(w);
    const CDNumber gamma_w_reflected = gamma(w_reflected);
    const CDNumber b_pq = beta(p, q, cfg.quadrature);
    const CDNumber b_reflected = beta(args.p_reflected(), q, cfg.quadrature);
    const CDNumber factor = cd_conj(args.q_prime) * args.decomposition.perpendicular;

    CDNumber lhs = gamma(p) * gamma(q);
    const CDNumber correction = (gamma_w - gamma_w_reflected) * factor * (b_pq - b_reflected) / 2.0;
    CDNumber rhs = gamma_w * b_pq - correction;

    IdentityReport report = make_report(std::move(lhs), std::move(rhs), cfg.tolerance,
                                        commutative ? "Gamma(p)Gamma(q) = Gamma(w)B(p,q) - correction; p, q share a "
                                                      "slice (commutative reduction, asserted)"
                                                    : "Gamma(p)Gamma(q) = Gamma(w)B(p,q) - correction; noncommutative "
                                                      "case, reported only");
    report.asserted = commutative;
    report.diagnostics.emplace_back("w", w);
    report.diagnostics.emplace_back("w_reflected", w_reflected);
    report.diagnostics.emplace_back("gamma_w", gamma_w);
    report.diagnostics.emplace_back("beta_pq", b_pq);
    report.diagnostics.emplace_back("beta_reflected_p", b_reflected);
    report.diagnostics.emplace_back("correction", correction);
    return report;
}

} // namespace cdgamma
