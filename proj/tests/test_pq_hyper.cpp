// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "pqsf/pq_hyper.hpp"

using namespace pqsf;

// Golden values computed with an independent 25-digit oracle (term-by-term
// series with adaptive-quadrature coefficients, cross-checked against direct
// adaptive quadrature of the integral form):
//   Phi_{0.5,0.3}(1.5;3;2)      = 0.39687773082201571239...
//   F_{0.2,0.7}(1.1,1.5;3;0.4)  = 0.13966713875461300852...
static constexpr double kPhiGold = 0.39687773082201571239;
static constexpr double kFGold = 0.13966713875461300852;

TEST_CASE("phi_pq golden value, both methods") {
    const HyperParams hp{{}, 1.5, 3.0};
    const PqParams pq{0.5, 0.3};
    Complex vi = phi_pq(hp, Complex(2.0, 0.0), pq, EvalMethod::Integral);
    Complex vs = phi_pq(hp, Complex(2.0, 0.0), pq, EvalMethod::Series);
    CHECK(vi.real() == doctest::Approx(kPhiGold).epsilon(1e-11));
    CHECK(vs.real() == doctest::Approx(kPhiGold).epsilon(1e-11));
    CHECK(std::abs(vi - vs) < 1e-11);
}

TEST_CASE("f_pq golden value, both methods") {
    const HyperParams hp{Complex(1.1, 0.0), 1.5, 3.0};
    const PqParams pq{0.2, 0.7};
    Complex vi = f_pq(hp, Complex(0.4, 0.0), pq, EvalMethod::Integral);
    Complex vs = f_pq(hp, Complex(0.4, 0.0), pq, EvalMethod::Series);
    CHECK(vi.real() == doctest::Approx(kFGold).epsilon(1e-11));
    CHECK(vs.real() == doctest::Approx(kFGold).epsilon(1e-11));
}

TEST_CASE("p=q=0 reductions to classical functions") {
    const HyperParams hp{Complex(0.7, 0.0), 1.2, 2.8};
    Complex phi = phi_pq(hp, Complex(1.3, 0.0), {0.0, 0.0});
    Complex ref = kummer_1f1(Complex(1.2, 0.0), Complex(2.8, 0.0), Complex(1.3, 0.0));
    CHECK(std::abs(phi - ref) < 1e-11 * std::abs(ref));

    Complex f = f_pq(hp, Complex(0.35, 0.0), {0.0, 0.0});
    Complex g = gauss_2f1(Complex(0.7, 0.0), Complex(1.2, 0.0), Complex(2.8, 0.0),
                          Complex(0.35, 0.0));
    CHECK(std::abs(f - g) < 1e-11 * std::abs(g));
}

TEST_CASE("phi transformation Phi_{p,q}(b;c;z) = e^z Phi_{q,p}(c-b;c;-z)") {
    const double b = 1.5, c = 3.25;
    const PqParams pq{0.4, 0.8};
    for (double z : {-1.5, 0.5, 2.0}) {
        Complex lhs = phi_pq({{}, b, c}, Complex(z, 0.0), pq);
        Complex rhs = std::exp(Complex(z, 0.0)) *
                      phi_pq({{}, c - b, c}, Complex(-z, 0.0), {pq.q, pq.p});
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(lhs));
    }
}

TEST_CASE("phi handles complex z") {
    Complex z(0.8, 0.6);
    Complex vi = phi_pq({{}, 1.5, 3.0}, z, {0.5, 0.3}, EvalMethod::Integral);
    Complex vs = phi_pq({{}, 1.5, 3.0}, z, {0.5, 0.3}, EvalMethod::Series);
    CHECK(std::abs(vi - vs) < 1e-10 * std::abs(vi));
    CHECK(vi.imag() != 0.0);
}

TEST_CASE("phi_pq_derivative shift rule vs finite differences") {
    const HyperParams hp{{}, 1.5, 3.0};
    const PqParams pq{0.5, 0.3};
    QuadConfig tight;
    tight.tol = {1e-15, 1e-13};
    const double z = 1.0, h = 1e-4;
    auto g = [&](double x) {
        return phi_pq(hp, Complex(x, 0.0), pq, EvalMethod::Integral, tight);
    };
    Complex d1 = (g(z + h) - g(z - h)) / (2.0 * h);
    Complex d2 = (g(z + h) - 2.0 * g(z) + g(z - h)) / (h * h);
    Complex r1 = phi_pq_derivative(hp, Complex(z, 0.0), pq, 1, tight);
    Complex r2 = phi_pq_derivative(hp, Complex(z, 0.0), pq, 2, tight);
    CHECK(std::abs(d1 - r1) < 1e-7 * std::abs(r1));
    CHECK(std::abs(d2 - r2) < 1e-6 * std::abs(r2));
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(phi_pq({{}, 3.0, 2.0}, Complex(1.0, 0.0), {0.1, 0.1}), DomainError);
    CHECK_THROWS_AS(phi_pq({{}, -1.0, 2.0}, Complex(1.0, 0.0), {0.1, 0.1}), DomainError);
    CHECK_THROWS_AS(phi_pq({{}, 1.0, 2.0}, Complex(1.0, 0.0), {-0.1, 0.1}), DomainError);
    // series form of F needs |z| < 1
    CHECK_THROWS_AS(f_pq({Complex(1.0, 0.0), 1.0, 2.0}, Complex(1.5, 0.0), {0.1, 0.1},
                         EvalMethod::Series),
                    DomainError);
    // integral form of F rejects the branch cut [1, inf)
    CHECK_THROWS_AS(f_pq({Complex(1.0, 0.0), 1.0, 2.0}, Complex(1.5, 0.0), {0.1, 0.1},
                         EvalMethod::Integral),
                    DomainError);
}
