// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#include "pqsf/pq_beta.hpp"

#include <cmath>

namespace pqsf {

void validate_beta_domain(const BetaArgs& args, const PqParams& pq) {
    if (!(pq.p >= 0.0) || !(pq.q >= 0.0))
        throw DomainError("beta_pq: p and q must be nonnegative");
    if (pq.p == 0.0 && !(args.x > 0.0))
        throw DomainError("beta_pq: x must be positive when p = 0");
    if (pq.q == 0.0 && !(args.y > 0.0))
        throw DomainError("beta_pq: y must be positive when q = 0");
}

QuadResult beta_pq(const BetaArgs& args, const PqParams& pq, const QuadConfig& cfg) {
    validate_beta_domain(args, pq);
    const double xm1 = args.x - 1.0;
    const double ym1 = args.y - 1.0;
    const double p = pq.p;
    const double q = pq.q;
    // Single exponential of the assembled log-integrand: the power factors and
    // the damping kernel can individually over/underflow where their product
    // is tame.
    Integrand f = [=](const QuadPoint& u) -> Complex {
        double e = xm1 * std::log(u.dist_a) + ym1 * std::log(u.dist_b);
        if (p > 0.0) e -= p / u.dist_a;
        if (q > 0.0) e -= q / u.dist_b;
        return std::exp(e);
    };
    return integrate_finite(f, {0.0, 1.0}, cfg);
}

QuadResult beta_p_reduction(const BetaArgs& args, double p, const QuadConfig& cfg) {
    // 1/(t(1-t)) = 1/t + 1/(1-t), so B_p is exactly B_{p,p}.
    return beta_pq(args, {p, p}, cfg);
}

}  // namespace pqsf
