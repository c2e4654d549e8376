// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <limits>

#include "pqsf/common.hpp"

namespace pqsf {

struct FiniteInterval {
    double a;
    double b;
};

struct QuadConfig {
    ToleranceSpec tol{};
    int max_level = 12;          // level-doubling limit
    int base_points_per_level = 8;  // abscissae per side at level 0
};

struct QuadResult {
    Complex value{};
    double err_estimate = 0.0;   // last level difference, a convergence signal
    long evaluations = 0;
    bool converged = false;
};

// Abscissa handed to an integrand. dist_a and dist_b are the exact distances
// to the interval endpoints, computed inside the variable transform so they
// stay accurate (well below 1 ulp of x) arbitrarily close to an endpoint.
// Endpoint-singular integrands must build their powers from these, not from
// x - a or b - x. For semi-infinite integrals dist_b is +inf.
struct QuadPoint {
    double x;
    double dist_a;
    double dist_b;
};

using Integrand = std::function<Complex(const QuadPoint&)>;

// tanh-sinh rule on (a,b). Tolerates algebraic endpoint singularities;
// abscissae are strictly interior.
QuadResult integrate_finite(const Integrand& f, FiniteInterval iv, const QuadConfig& cfg = {});

// exp-sinh rule on (0,inf) for decaying integrands.
QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg = {});

// Nested exp-sinh on (0,inf)^2; outer variable is the first argument.
QuadResult integrate_2d_semi_infinite(const std::function<Complex(double, double)>& f,
                                      const QuadConfig& cfg = {});

// Convenience wrappers for integrands that only need the point itself.
QuadResult integrate_finite(const std::function<Complex(double)>& f, FiniteInterval iv,
                            const QuadConfig& cfg = {});
QuadResult integrate_semi_infinite(const std::function<Complex(double)>& f,
                                   const QuadConfig& cfg = {});

}  // namespace pqsf
