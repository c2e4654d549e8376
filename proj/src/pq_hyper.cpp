// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#include "pqsf/pq_hyper.hpp"

#include <cmath>
#include <vector>

namespace pqsf {

namespace {

void validate_hyper_params(const HyperParams& hp, const char* what) {
    if (!(hp.c > hp.b) || !(hp.b > 0.0))
        throw DomainError(std::string(what) + ": requires c > b > 0");
}

void require_converged(const QuadResult& r, const char* what) {
    if (!r.converged)
        throw ConvergenceError(std::string(what) + ": quadrature did not converge");
}

// Series sum_{n} B_{p,q}(b+n, c-b)/B(b, c-b) * factor(n) * z^n/n!, one beta_pq
// quadrature per coefficient. Coefficients are computed on demand and kept
// for the duration of this call only.
Complex pq_series(const HyperParams& hp, Complex z, const PqParams& pq,
                  const std::function<Complex(int)>& poch_factor, const QuadConfig& cfg,
                  const SeriesPolicy& policy, const char* what) {
    const double cb = hp.c - hp.b;
    const double denom = beta_classical(hp.b, cb);
    Complex sum = 0.0;
    Complex zpow_over_fact = 1.0;
    int small_run = 0;
    for (int n = 0; n < policy.max_terms; ++n) {
        QuadResult coeff = beta_pq({hp.b + n, cb}, pq, cfg);
        require_converged(coeff, what);
        Complex term = coeff.value / denom * poch_factor(n) * zpow_over_fact;
        sum += term;
        if (std::abs(term) <= policy.stop_ratio * std::abs(sum)) {
            if (++small_run >= policy.consecutive_small) return sum;
        } else {
            small_run = 0;
        }
        zpow_over_fact *= z / static_cast<double>(n + 1);
    }
    throw ConvergenceError(std::string(what) + ": series did not converge within max_terms");
}

}  // namespace

Complex phi_pq(const HyperParams& hp, Complex z, const PqParams& pq, EvalMethod method,
               const QuadConfig& cfg, const SeriesPolicy& policy) {
    validate_hyper_params(hp, "phi_pq");
    if (!(pq.p >= 0.0) || !(pq.q >= 0.0))
        throw DomainError("phi_pq: p and q must be nonnegative");

    if (method == EvalMethod::Series)
        return pq_series(hp, z, pq, [](int) { return Complex(1.0); }, cfg, policy, "phi_pq");

    const double bm1 = hp.b - 1.0;
    const double cbm1 = hp.c - hp.b - 1.0;
    const double p = pq.p;
    const double q = pq.q;
    Integrand f = [=](const QuadPoint& u) -> Complex {
        Complex e = bm1 * std::log(u.dist_a) + cbm1 * std::log(u.dist_b) + z * u.x;
        if (p > 0.0) e -= p / u.dist_a;
        if (q > 0.0) e -= q / u.dist_b;
        if (e.real() > 705.0)
            throw NonFiniteError("phi_pq: integrand overflow");
        return std::exp(e);
    };
    QuadResult r = integrate_finite(f, {0.0, 1.0}, cfg);
    require_converged(r, "phi_pq");
    return r.value / beta_classical(hp.b, hp.c - hp.b);
}

Complex f_pq(const HyperParams& hp, Complex z, const PqParams& pq, EvalMethod method,
             const QuadConfig& cfg, const SeriesPolicy& policy) {
    validate_hyper_params(hp, "f_pq");
    if (!(pq.p >= 0.0) || !(pq.q >= 0.0))
        throw DomainError("f_pq: p and q must be nonnegative");

    if (method == EvalMethod::Series) {
        if (std::abs(z) >= 1.0)
            throw DomainError("f_pq: series requires |z| < 1");
        Complex a = hp.a;
        Complex running = 1.0;
        // (a)_n built incrementally; poch_factor(n) returns (a)_n.
        auto poch = [a, running](int n) mutable {
            if (n > 0) running *= a + static_cast<double>(n - 1);
            return running;
        };
        return pq_series(hp, z, pq, poch, cfg, policy, "f_pq");
    }

    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw DomainError("f_pq: integral form requires |arg(1-z)| < pi (z off [1,inf))");
    const double bm1 = hp.b - 1.0;
    const double cbm1 = hp.c - hp.b - 1.0;
    const double p = pq.p;
    const double q = pq.q;
    const Complex a = hp.a;
    Integrand f = [=](const QuadPoint& u) -> Complex {
        // principal branch of (1 - z t)^{-a}
        Complex e = bm1 * std::log(u.dist_a) + cbm1 * std::log(u.dist_b) -
                    a * std::log(1.0 - z * u.x);
        if (p > 0.0) e -= p / u.dist_a;
        if (q > 0.0) e -= q / u.dist_b;
        if (e.real() > 705.0)
            throw NonFiniteError("f_pq: integrand overflow");
        return std::exp(e);
    };
    QuadResult r = integrate_finite(f, {0.0, 1.0}, cfg);
    require_converged(r, "f_pq");
    return r.value / beta_classical(hp.b, hp.c - hp.b);
}

Complex phi_pq_derivative(const HyperParams& hp, Complex z, const PqParams& pq, int n,
                          const QuadConfig& cfg, const SeriesPolicy& policy) {
    if (n < 0) throw DomainError("phi_pq_derivative: n must be >= 0");
    validate_hyper_params(hp, "phi_pq_derivative");
    HyperParams shifted{hp.a, hp.b + n, hp.c + n};
    Complex ratio = pochhammer(hp.b, n) / pochhammer(hp.c, n);
    return ratio * phi_pq(shifted, z, pq, EvalMethod::Integral, cfg, policy);
}

}  // namespace pqsf
