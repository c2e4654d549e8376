// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#include "pqsf/transforms.hpp"

#include <algorithm>
#include <cmath>

namespace pqsf {

namespace {

void validate_orders(const WhittakerParams& wp, const MellinOrders& mo) {
    if (!(mo.r > 0.0) || !(mo.s > 0.0))
        throw DomainError("mellin: requires r > 0 and s > 0");
    if (!(wp.rho > -0.5) || !(wp.rho - wp.lambda > -0.5) || !(wp.rho + wp.lambda > -0.5))
        throw DomainError("mellin: requires rho > -1/2 and rho +- lambda > -1/2");
    // The closed form's beta factor needs rho+r-lambda+1/2 > 0 and
    // rho+s+lambda+1/2 > 0 (note: s, not r, in the + branch).
    if (!(wp.rho + mo.r - wp.lambda + 0.5 > 0.0) || !(wp.rho + mo.s + wp.lambda + 0.5 > 0.0))
        throw DomainError("mellin: gamma arguments of the beta factor must be positive");
}

void validate_laplace(const LaplaceParams& lp, const WhittakerParams& wp) {
    if (lp.mu == 0.0) throw DomainError("laplace: mu must be nonzero");
    if (!(lp.delta + wp.rho > -0.5))
        throw DomainError("laplace: requires delta + rho > -1/2");
    if (!(wp.rho > -0.5) || !(wp.rho - wp.lambda > -0.5) || !(wp.rho + wp.lambda > -0.5))
        throw DomainError("laplace: requires rho > -1/2 and rho +- lambda > -1/2");
    if (!(std::abs(2.0 * lp.mu / (2.0 * lp.alpha + lp.mu)) < 1.0))
        throw DomainError("laplace: requires |2 mu / (2 alpha + mu)| < 1");
    // z-integral must converge for every t in [0,1]
    if (!(lp.alpha + 0.5 * lp.mu - std::max(lp.mu, 0.0) > 0.0))
        throw DomainError("laplace: requires alpha + mu/2 - max(mu,0) > 0");
}

}  // namespace

Complex mellin_closed(Complex z, const WhittakerParams& wp, const MellinOrders& mo,
                      const SeriesPolicy& policy) {
    validate_orders(wp, mo);
    const double lam = wp.lambda;
    const double rho = wp.rho;
    const double gammas = std::exp((log_gamma(mo.r) + log_gamma(mo.s)).real());
    const double beta_ratio = beta_classical(rho + mo.r - lam + 0.5, rho + mo.s + lam + 0.5) /
                              beta_classical(rho - lam + 0.5, rho + lam + 0.5);
    Complex f = kummer_1f1(rho + mo.r - lam + 0.5, 2.0 * rho + mo.r + mo.s + 1.0, z, policy);
    return principal_power(z, rho + 0.5) * std::exp(-z / 2.0) * gammas * beta_ratio * f;
}

QuadResult mellin_numeric(double z, const WhittakerParams& wp, const MellinOrders& mo,
                          const QuadConfig& cfg, bool q_outer) {
    validate_orders(wp, mo);
    if (!(z > 0.0)) throw DomainError("mellin_numeric: requires real z > 0");
    const double rm1 = mo.r - 1.0;
    const double sm1 = mo.s - 1.0;
    // The Whittaker factor is held at reference accuracy independent of the
    // (typically looser) tolerance steering the 2-D nesting.
    const QuadConfig m_cfg{};
    auto g = [&](double p, double q) -> Complex {
        Complex m = whittaker_pq(z, wp, {p, q}, {RepresentationId::Tag::Int1}, m_cfg);
        return std::exp(rm1 * std::log(p) + sm1 * std::log(q)) * m;
    };
    if (q_outer)
        return integrate_2d_semi_infinite([&](double q, double p) { return g(p, q); }, cfg);
    return integrate_2d_semi_infinite(g, cfg);
}

Complex laplace_closed(const LaplaceParams& lp, const WhittakerParams& wp, const PqParams& pq,
                       const QuadConfig& cfg, const SeriesPolicy& policy) {
    validate_laplace(lp, wp);
    const double s = wp.rho + 0.5;
    const double a = lp.delta + wp.rho + 0.5;
    Complex pref = principal_power(Complex(lp.mu, 0.0), s) *
                   std::exp(log_gamma(a).real()) *
                   principal_power(Complex(lp.alpha + 0.5 * lp.mu, 0.0), -a);
    Complex f = f_pq({a, wp.rho - wp.lambda + 0.5, 2.0 * wp.rho + 1.0},
                     2.0 * lp.mu / (2.0 * lp.alpha + lp.mu), pq, EvalMethod::Integral, cfg,
                     policy);
    return pref * f;
}

QuadResult laplace_numeric(const LaplaceParams& lp, const WhittakerParams& wp,
                           const PqParams& pq, const QuadConfig& cfg) {
    validate_laplace(lp, wp);
    const double s = wp.rho + 0.5;
    const double mu = lp.mu;
    const double amu = std::abs(mu);
    const QuadConfig m_cfg{};
    Integrand f = [&](const QuadPoint& zp) -> Complex {
        const double zz = zp.x;
        // crude log-bound on |z^{delta-1} e^{-alpha z} M(mu z)|; dead tail
        // samples are skipped before the Whittaker factor can overflow
        const double bound = (lp.delta - 1.0) * std::log(zz) - lp.alpha * zz +
                             s * std::log(amu * zz) + 0.5 * amu * zz;
        if (bound < -745.0) return 0.0;
        Complex m = mu > 0.0 ? whittaker_pq(mu * zz, wp, pq, {RepresentationId::Tag::Int1}, m_cfg)
                             : whittaker_negative_axis(mu * zz, wp, pq, m_cfg);
        return std::exp((lp.delta - 1.0) * std::log(zz) - lp.alpha * zz) * m;
    };
    return integrate_semi_infinite(f, cfg);
}

Complex laplace_special_case(double alpha, const WhittakerParams& wp, const PqParams& pq,
                             const QuadConfig& cfg, const SeriesPolicy& policy) {
    if (!(alpha > 1.5)) throw DomainError("laplace_special_case: requires alpha > 3/2");
    const double s = wp.rho + 0.5;
    if (!(wp.rho > -0.5) || !(wp.rho - wp.lambda > -0.5) || !(wp.rho + wp.lambda > -0.5))
        throw DomainError("laplace_special_case: requires rho > -1/2 and rho +- lambda > -1/2");
    // rho+3/2 assembled exactly as laplace_closed assembles delta+rho+1/2,
    // keeping the two routes bit-comparable
    const double a3 = 1.0 + wp.rho + 0.5;
    Complex pref = principal_power(Complex(-1.0, 0.0), s) *
                   std::exp(log_gamma(a3).real()) *
                   principal_power(Complex(alpha - 0.5, 0.0), -a3);
    Complex f = f_pq({a3, wp.rho - wp.lambda + 0.5, 2.0 * wp.rho + 1.0},
                     2.0 / (1.0 - 2.0 * alpha), pq, EvalMethod::Integral, cfg, policy);
    return pref * f;
}

}  // namespace pqsf
