#include "cdgamma/beta.hpp"
#include "cdgamma/elementary.hpp"
#include "cdgamma/errors.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace cdgamma {

namespace {

using Pair = std::pair<int, int>; // (r_i, s_i): (ad u)^{r_i} (ad v)^{s_i}

double inverse_factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f /= k;
    return f;
}

CDNumber ad_power(const CDNumber& x, int times, CDNumber y) {
    for (int k = 0; k < times; ++k) y = commutator(x, y);
    return y;
}

// Calls visit(seq) for every sequence of `count` pairs with r_i + s_i >= 1,
// sum r_i = r and sum s_i = s.
template <class Visit>
void for_each_sequence(int count, int r, int s, std::vector<Pair>& seq, Visit&& visit) {
    if (count == 0) {
        if (r == 0 && s == 0) visit(seq);
        return;
    }
    for (int ri = 0; ri <= r; ++ri) {
        for (int si = 0; si <= s; ++si) {
            if (ri + si == 0) continue;
            seq.emplace_back(ri, si);
            for_each_sequence(count - 1, r - ri, s - si, seq, visit);
            seq.pop_back();
        }
    }
}

// (prod_i (ad u)^{r_i} (ad v)^{s_i} / (r_i! s_i!)) applied to y; i = 1 is outermost.
CDNumber apply_sequence(const CDNumber& u, const CDNumber& v, const std::vector<Pair>& seq, CDNumber y,
                        double& weight) {
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        y = ad_power(v, it->second, std::move(y));
        y = ad_power(u, it->first, std::move(y));
        weight *= inverse_factorial(it->first) * inverse_factorial(it->second);
    }
    return y;
}

CDNumber dynkin_series(const CDNumber& u, const CDNumber& v, int order) {
    CDNumber w(u.level());
    std::vector<Pair> seq;
    for (int n = 1; n <= order; ++n) {
        for (int r = 0; r <= n; ++r) {
            const int s = n - r;
            for (int m = 1; m <= n; ++m) {
                const double c = ((m % 2 == 1) ? 1.0 : -1.0) / (static_cast<double>(m) * n);
                // w'_{r,s}: the innermost factor is (ad u)^{r_m} / r_m! applied to v
                if (s >= 1) {
                    for (int rm = 0; rm <= r; ++rm) {
                        const CDNumber inner_term = ad_power(u, rm, v);
                        for_each_sequence(m - 1, r - rm, s - 1, seq, [&](const std::vector<Pair>& pairs) {
                            double weight = inverse_factorial(rm);
                            CDNumber term = apply_sequence(u, v, pairs, inner_term, weight);
                            w += term * (c * weight);
                        });
                    }
                }
                // w''_{r,s}: the product of m - 1 factors applied to u
                if (r >= 1) {
                    for_each_sequence(m - 1, r - 1, s, seq, [&](const std::vector<Pair>& pairs) {
                        double weight = 1.0;
                        CDNumber term = apply_sequence(u, v, pairs, u, weight);
                        w += term * (c * weight);
                    });
                }
            }
        }
    }
    return w;
}

} // namespace

CDNumber ch_w(const CDNumber& u, const CDNumber& v, const CHConfig& cfg) {
    if (u.level() != v.level()) throw Error(ErrorKind::level_mismatch, "ch_w: operand levels differ");
    if (cfg.truncation_order < 1) throw Error(ErrorKind::invalid_input, "ch_w: truncation_order must be >= 1");
    if (!generates_associative_subalgebra(u, v)) {
        throw Error(ErrorKind::precondition, "ch_w needs u and v to generate an associative (quaternionic) subalgebra");
    }
    if (share_slice(u, v, 1e-15)) return u + v;
    const CDNumber up = u.pure();
    const CDNumber vp = v.pure();
    const double size = up.norm() + vp.norm();
    if (!(size < cfg.norm_guard)) {
        std::ostringstream msg;
        msg << "ch_w: |u'| + |v'| = " << size << " is outside the trusted radius " << cfg.norm_guard;
        throw Error(ErrorKind::convergence_risk, msg.str());
    }
    // real parts are central: e^u e^v = e^{u0 + v0} e^{u'} e^{v'}
    return dynkin_series(up, vp, cfg.truncation_order) + (u.re() + v.re());
}

} // namespace cdgamma
