// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#include "pqsf/quadrature.hpp"

#include <cmath>
#include <vector>

namespace pqsf {

namespace {

constexpr double kPiHalf = 1.57079632679489661923;

// |u| cap for tanh-sinh: beyond this sech^2(u) underflows and the weight is
// exactly zero in double, so there is nothing left to sample.
constexpr double kTanhSinhUMax = 354.0;
// |u| cap for exp-sinh: keeps the abscissa e^u inside the normal double range.
constexpr double kExpSinhUMax = 690.0;

// Two consecutive negligible samples end a side at the current level;
// tails of the transformed integrands decay double-exponentially.
constexpr int kSideBreakRun = 3;

struct Sample {
    bool usable;     // weight nonzero after the transform guards
    QuadPoint pt;
    double weight;
};

// tanh-sinh abscissa/weight at parameter t for the interval (a,b).
// Distances to both endpoints are computed from e^{-|u|} directly, so they
// remain fully accurate when the point is within 1e-300 of an endpoint.
Sample tanh_sinh_node(double t, double a, double b) {
    const double hw = 0.5 * (b - a);
    const double u = kPiHalf * std::sinh(t);
    if (std::abs(u) > kTanhSinhUMax) return {false, {}, 0.0};
    const double eu = std::exp(-2.0 * std::abs(u));
    const double near_dist = hw * 2.0 * eu / (1.0 + eu);   // to the endpoint u runs toward
    const double far_dist = hw * 2.0 / (1.0 + eu);
    const double sech = 2.0 * std::exp(-std::abs(u)) / (1.0 + eu);
    const double w = hw * kPiHalf * std::cosh(t) * sech * sech;
    QuadPoint pt;
    if (u >= 0.0) {
        pt.dist_b = near_dist;
        pt.dist_a = far_dist;
        pt.x = b - near_dist;
    } else {
        pt.dist_a = near_dist;
        pt.dist_b = far_dist;
        pt.x = a + near_dist;
    }
    return {true, pt, w};
}

// exp-sinh node on (0,inf).
Sample exp_sinh_node(double t) {
    const double u = kPiHalf * std::sinh(t);
    if (std::abs(u) > kExpSinhUMax) return {false, {}, 0.0};
    const double x = std::exp(u);
    const double w = x * kPiHalf * std::cosh(t);
    return {true, {x, x, std::numeric_limits<double>::infinity()}, w};
}

using NodeFn = Sample (*)(double, double, double);

Sample node_dispatch_finite(double t, double a, double b) { return tanh_sinh_node(t, a, b); }
Sample node_dispatch_semi(double t, double, double) { return exp_sinh_node(t); }

QuadResult run_levels(const Integrand& f, NodeFn node, double a, double b, double t_max,
                      const QuadConfig& cfg) {
    const double h0 = t_max / static_cast<double>(cfg.base_points_per_level);
    QuadResult res;

    auto eval = [&](double t) -> Complex {
        Sample s = node(t, a, b);
        if (!s.usable || s.weight == 0.0) return 0.0;
        Complex v = f(s.pt);
        ++res.evaluations;
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw NonFiniteError("quadrature: non-finite integrand sample at x=" +
                                 std::to_string(s.pt.x));
        return s.weight * v;
    };

    // One side of a level: t = start, start+step, ... while |t| <= t_max.
    // Ends a side early once several consecutive samples are dead relative to
    // the running sum and the previous-level estimate; the transformed tails
    // decay double-exponentially, so nothing of weight is skipped.
    auto sweep_side = [&](double start, double step, double scale) -> Complex {
        Complex sum = 0.0;
        int dead_run = 0;
        for (double t = start; std::abs(t) <= t_max; t += step) {
            Complex c = eval(t);
            sum += c;
            if (std::abs(c) <= 1e-17 * (std::abs(sum) + scale) + 1e-305) {
                if (++dead_run >= kSideBreakRun && std::abs(t) > 1.0) break;
            } else {
                dead_run = 0;
            }
        }
        return sum;
    };

    // Level 0: full trapezoid with step h0.
    Complex row = eval(0.0) + sweep_side(h0, h0, 0.0) + sweep_side(-h0, -h0, 0.0);
    Complex estimate = h0 * row;

    for (int level = 1; level <= cfg.max_level; ++level) {
        const double h = h0 / static_cast<double>(1 << level);
        const double scale = std::abs(estimate);
        Complex new_sum = sweep_side(h, 2.0 * h, scale) + sweep_side(-h, -2.0 * h, scale);
        Complex next = 0.5 * estimate + h * new_sum;
        res.err_estimate = std::abs(next - estimate);
        estimate = next;
        if (level >= 2 &&
            res.err_estimate <= cfg.tol.abs_tol + cfg.tol.rel_tol * std::abs(estimate)) {
            res.converged = true;
            break;
        }
    }
    res.value = estimate;
    return res;
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, FiniteInterval iv, const QuadConfig& cfg) {
    if (!(iv.b > iv.a)) throw DomainError("integrate_finite: requires b > a");
    if (cfg.max_level < 3) throw DomainError("integrate_finite: max_level must be >= 3");
    // largest t with sech^2(u) still nonzero
    const double t_max = std::asinh(kTanhSinhUMax / kPiHalf);
    return run_levels(f, node_dispatch_finite, iv.a, iv.b, t_max, cfg);
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg) {
    if (cfg.max_level < 3) throw DomainError("integrate_semi_infinite: max_level must be >= 3");
    const double t_max = std::asinh(kExpSinhUMax / kPiHalf);
    return run_levels(f, node_dispatch_semi, 0.0, 0.0, t_max, cfg);
}

QuadResult integrate_2d_semi_infinite(const std::function<Complex(double, double)>& f,
                                      const QuadConfig& cfg) {
    long inner_evals = 0;
    double worst_inner_err = 0.0;
    bool inner_ok = true;

    Integrand outer = [&](const QuadPoint& op) -> Complex {
        QuadResult inner = integrate_semi_infinite(
            [&](const QuadPoint& ip) { return f(op.x, ip.x); }, cfg);
        inner_evals += inner.evaluations;
        worst_inner_err = std::max(worst_inner_err, inner.err_estimate);
        inner_ok = inner_ok && inner.converged;
        return inner.value;
    };

    QuadResult res = integrate_semi_infinite(outer, cfg);
    res.evaluations += inner_evals;
    res.err_estimate += worst_inner_err;
    res.converged = res.converged && inner_ok;
    return res;
}

QuadResult integrate_finite(const std::function<Complex(double)>& f, FiniteInterval iv,
                            const QuadConfig& cfg) {
    return integrate_finite(Integrand([&](const QuadPoint& p) { return f(p.x); }), iv, cfg);
}

QuadResult integrate_semi_infinite(const std::function<Complex(double)>& f,
                                   const QuadConfig& cfg) {
    return integrate_semi_infinite(Integrand([&](const QuadPoint& p) { return f(p.x); }), cfg);
}

}  // namespace pqsf
