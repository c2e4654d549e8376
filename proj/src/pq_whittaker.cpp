// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#include "pqsf/pq_whittaker.hpp"

#include <cmath>

namespace pqsf {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate_whittaker(const WhittakerParams& wp, const PqParams& pq) {
    if (!(pq.p >= 0.0) || !(pq.q >= 0.0))
        throw DomainError("whittaker_pq: p and q must be nonnegative");
    if (!(wp.rho > -0.5))
        throw DomainError("whittaker_pq: requires rho > -1/2");
    // Endpoint integrability; each constraint is absorbed by exponential
    // damping when the matching parameter is strictly positive.
    if (pq.p == 0.0 && !(wp.rho - wp.lambda > -0.5))
        throw DomainError("whittaker_pq: requires rho - lambda > -1/2 when p = 0");
    if (pq.q == 0.0 && !(wp.rho + wp.lambda > -0.5))
        throw DomainError("whittaker_pq: requires rho + lambda > -1/2 when q = 0");
}

void reject_branch_cut(const Complex& z) {
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw BranchCutError("whittaker_pq: z on the closed negative real axis (branch cut)");
}

// log of the normalizing beta factor B(rho-lambda+1/2, rho+lambda+1/2);
// complex log_gamma so the relaxed parameter region (negative non-integer
// arguments) stays well defined.
Complex log_beta_norm(const WhittakerParams& wp) {
    return log_gamma(wp.rho - wp.lambda + 0.5) + log_gamma(wp.rho + wp.lambda + 0.5) -
           log_gamma(2.0 * wp.rho + 1.0);
}

Complex require_converged(const QuadResult& r, const char* what) {
    if (!r.converged)
        throw ConvergenceError(std::string(what) + ": quadrature did not converge");
    return r.value;
}

// Beta-type kernel on (0,1): exp(ea*ln(t) + eb*ln(1-t) + zc*t - p/t - q/(1-t)).
Integrand unit_interval_kernel(double ea, double eb, Complex zc, double p, double q) {
    return [=](const QuadPoint& u) -> Complex {
        Complex e = ea * std::log(u.dist_a) + eb * std::log(u.dist_b) + zc * u.x;
        if (p > 0.0) e -= p / u.dist_a;
        if (q > 0.0) e -= q / u.dist_b;
        if (e.real() > 705.0) throw NonFiniteError("whittaker_pq: integrand overflow");
        return std::exp(e);
    };
}

}  // namespace

Complex principal_power(Complex base, Complex exponent) {
    if (base == Complex(0.0)) {
        if (exponent.real() > 0.0) return 0.0;
        throw DomainError("principal_power: zero base with Re(exponent) <= 0");
    }
    if (base.imag() == 0.0 && base.real() > 0.0 && exponent.imag() == 0.0)
        return std::exp(exponent.real() * std::log(base.real()));  // stays exactly real
    if (base.imag() == 0.0 && base.real() < 0.0) {
        // arg = +pi, pinned regardless of the sign of the imaginary zero
        Complex lg(std::log(-base.real()), kPi);
        return std::exp(exponent * lg);
    }
    return std::exp(exponent * std::log(base));
}

Complex whittaker_pq(Complex z, const WhittakerParams& wp, const PqParams& pq,
                     const RepresentationId& rep, const QuadConfig& cfg) {
    reject_branch_cut(z);
    validate_whittaker(wp, pq);
    const double lam = wp.lambda;
    const double rho = wp.rho;
    const double s = rho + 0.5;
    const double p = pq.p;
    const double q = pq.q;
    const Complex zpow = principal_power(z, s);
    const Complex inv_beta = std::exp(-log_beta_norm(wp));

    using Tag = RepresentationId::Tag;
    switch (rep.tag) {
        case Tag::Definition:
            return zpow * std::exp(-z / 2.0) *
                   phi_pq({{}, rho - lam + 0.5, 2.0 * rho + 1.0}, z, pq, EvalMethod::Integral,
                          cfg);
        case Tag::Reflected:
            return zpow * std::exp(z / 2.0) *
                   phi_pq({{}, rho + lam + 0.5, 2.0 * rho + 1.0}, -z, {q, p},
                          EvalMethod::Integral, cfg);
        case Tag::Int1: {
            QuadResult r = integrate_finite(
                unit_interval_kernel(rho - lam - 0.5, rho + lam - 0.5, z, p, q), {0.0, 1.0},
                cfg);
            return zpow * std::exp(-z / 2.0) * inv_beta * require_converged(r, "whittaker Int1");
        }
        case Tag::Int2: {
            // t -> 1-u image of Int1: kernel exp(-zu - p/(1-u) - q/u)
            Integrand f = [=](const QuadPoint& u) -> Complex {
                Complex e = (rho + lam - 0.5) * std::log(u.dist_a) +
                            (rho - lam - 0.5) * std::log(u.dist_b) - z * u.x;
                if (q > 0.0) e -= q / u.dist_a;
                if (p > 0.0) e -= p / u.dist_b;
                if (e.real() > 705.0) throw NonFiniteError("whittaker_pq: integrand overflow");
                return std::exp(e);
            };
            QuadResult r = integrate_finite(f, {0.0, 1.0}, cfg);
            return zpow * std::exp(z / 2.0) * inv_beta * require_converged(r, "whittaker Int2");
        }
        case Tag::Int3:
        case Tag::Int5: {
            const FiniteInterval ab =
                rep.tag == Tag::Int5 ? FiniteInterval{-1.0, 1.0} : rep.ab;
            if (!(ab.b > ab.a)) throw DomainError("whittaker_pq: Int3 requires b > a");
            const double width = ab.b - ab.a;
            // Int5 merges e^{-z/2} into the kernel: e^{-z/2} e^{z(u+1)/2} = e^{zu/2}.
            const bool merged = rep.tag == Tag::Int5;
            Integrand f = [=](const QuadPoint& u) -> Complex {
                Complex e = (rho - lam - 0.5) * std::log(u.dist_a) +
                            (rho + lam - 0.5) * std::log(u.dist_b);
                e += merged ? z * u.x / 2.0 : z * (u.dist_a / width);
                if (p > 0.0) e -= p * width / u.dist_a;
                if (q > 0.0) e -= q * width / u.dist_b;
                if (e.real() > 705.0) throw NonFiniteError("whittaker_pq: integrand overflow");
                return std::exp(e);
            };
            QuadResult r = integrate_finite(f, ab, cfg);
            Complex pref = std::pow(width, -2.0 * rho) * zpow * inv_beta;
            if (!merged) pref *= std::exp(-z / 2.0);
            return pref * require_converged(r, "whittaker Int3");
        }
        case Tag::Int4: {
            // t = u/(1+u) image of Int1 on (0,inf)
            Integrand f = [=](const QuadPoint& u) -> Complex {
                const double x = u.x;
                Complex e = (rho - lam - 0.5) * std::log(x) -
                            (2.0 * rho + 1.0) * std::log1p(x) + z * (x / (1.0 + x));
                if (p > 0.0) e -= p * (1.0 + x) / x;
                if (q > 0.0) e -= q * (1.0 + x);
                if (e.real() > 705.0) throw NonFiniteError("whittaker_pq: integrand overflow");
                return std::exp(e);
            };
            QuadResult r = integrate_semi_infinite(f, cfg);
            return zpow * std::exp(-z / 2.0) * inv_beta * require_converged(r, "whittaker Int4");
        }
    }
    throw DomainError("whittaker_pq: unknown representation");
}

Complex whittaker_reflect(Complex z, const WhittakerParams& wp, const PqParams& pq,
                          const QuadConfig& cfg) {
    reject_branch_cut(z);
    validate_whittaker(wp, pq);
    const double s = wp.rho + 0.5;

    // M_{q,p;-lambda,rho}(-z) = (-z)^s e^{z/2} Phi_{q,p}(rho+lambda+1/2; 2rho+1; -z).
    // On the positive real axis (-z)^s takes the lower-edge branch arg(-z) = -pi,
    // the boundary limit from Im z > 0; elsewhere the principal branch.
    Complex pow_mz;
    Complex prefactor;
    if (z.imag() == 0.0) {
        pow_mz = std::exp(s * Complex(std::log(z.real()), -kPi));
        prefactor = principal_power(Complex(-1.0, 0.0), s);  // arg(-1) = pi
    } else {
        pow_mz = principal_power(-z, s);
        prefactor = z.imag() > 0.0 ? std::exp(Complex(0.0, kPi * s))
                                   : std::exp(Complex(0.0, -kPi * s));
    }
    Complex phi = phi_pq({{}, wp.rho + wp.lambda + 0.5, 2.0 * wp.rho + 1.0}, -z, {pq.q, pq.p},
                         EvalMethod::Integral, cfg);
    return prefactor * pow_mz * std::exp(z / 2.0) * phi;
}

Complex whittaker_derivative_formula(Complex z, const WhittakerParams& wp, const PqParams& pq,
                                     int n, const QuadConfig& cfg) {
    if (n < 0) throw DomainError("whittaker_derivative_formula: n must be >= 0");
    const double half_n = 0.5 * static_cast<double>(n);
    WhittakerParams shifted{wp.lambda - half_n, wp.rho + half_n};
    Complex ratio = pochhammer(wp.rho - wp.lambda + 0.5, n) / pochhammer(2.0 * wp.rho + 1.0, n);
    Complex m = whittaker_pq(z, shifted, pq, {}, cfg);
    return ratio * std::exp(z / 2.0) * principal_power(z, -(wp.rho + half_n + 0.5)) * m;
}

Complex whittaker_negative_axis(double z, const WhittakerParams& wp, const PqParams& pq,
                                const QuadConfig& cfg) {
    if (!(z < 0.0)) throw DomainError("whittaker_negative_axis: requires z < 0");
    validate_whittaker(wp, pq);
    const Complex zc(z, 0.0);
    const double s = wp.rho + 0.5;
    // (z)^s with arg(z) = pi; the Phi factor at a negative real argument is
    // branch-free (its integral kernel is e^{zt}).
    Complex zpow = principal_power(zc, s);
    QuadResult r = integrate_finite(
        unit_interval_kernel(wp.rho - wp.lambda - 0.5, wp.rho + wp.lambda - 0.5, zc, pq.p, pq.q),
        {0.0, 1.0}, cfg);
    return zpow * std::exp(-zc / 2.0) * std::exp(-log_beta_norm(wp)) *
           require_converged(r, "whittaker_negative_axis");
}

}  // namespace pqsf
