// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "pqsf/pq_whittaker.hpp"

using namespace pqsf;
using Tag = RepresentationId::Tag;

// Golden value from an independent 25-digit oracle (series with
// adaptive-quadrature coefficients): M_{0.3,0.7;0.25,1}(1.5).
static constexpr double kMGold = 0.14480946213733718429;

TEST_CASE("principal_power conventions") {
    CHECK(principal_power(Complex(4.0, 0.0), Complex(0.5, 0.0)) == Complex(2.0, 0.0));
    // arg(-1) = pi, so (-1)^{1/2} = i exactly up to rounding
    Complex i = principal_power(Complex(-1.0, 0.0), Complex(0.5, 0.0));
    CHECK(std::abs(i - Complex(0.0, 1.0)) < 1e-15);
    CHECK(principal_power(Complex(0.0, 0.0), Complex(2.0, 0.0)) == Complex(0.0, 0.0));
    CHECK_THROWS_AS(principal_power(Complex(0.0, 0.0), Complex(-1.0, 0.0)), DomainError);
}

TEST_CASE("whittaker golden value across representations") {
    const WhittakerParams wp{0.25, 1.0};
    const PqParams pq{0.3, 0.7};
    const Complex z(1.5, 0.0);
    for (RepresentationId rep : {RepresentationId{Tag::Definition},
                                 RepresentationId{Tag::Int1},
                                 RepresentationId{Tag::Int2},
                                 RepresentationId{Tag::Int3, {-1.0, 1.0}},
                                 RepresentationId{Tag::Int3, {0.5, 3.0}},
                                 RepresentationId{Tag::Int4},
                                 RepresentationId{Tag::Int5},
                                 RepresentationId{Tag::Reflected}}) {
        Complex v = whittaker_pq(z, wp, pq, rep);
        CHECK(v.real() == doctest::Approx(kMGold).epsilon(1e-9));
        CHECK(std::abs(v.imag()) < 1e-12);
    }
}

TEST_CASE("classical reduction M_{0,1/2}(z) = 2 sinh(z/2) at p=q=0") {
    for (double z : {0.25, 1.0, 3.0}) {
        Complex v = whittaker_pq(Complex(z, 0.0), {0.0, 0.5}, {0.0, 0.0}, {Tag::Int1});
        CHECK(v.real() == doctest::Approx(2.0 * std::sinh(0.5 * z)).epsilon(1e-11));
    }
}

TEST_CASE("Int5 equals Int3 on (-1,1) to 1e-12") {
    const WhittakerParams wp{0.25, 1.0};
    const PqParams pq{0.3, 0.7};
    for (double z : {0.5, 1.5, 3.0}) {
        Complex a = whittaker_pq(Complex(z, 0.0), wp, pq, {Tag::Int5});
        Complex b = whittaker_pq(Complex(z, 0.0), wp, pq, {Tag::Int3, {-1.0, 1.0}});
        CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
    }
}

TEST_CASE("transformation formula in the upper half-plane") {
    // For Im z > 0 every branch is principal and the identity is exact.
    const Complex z(1.0, 0.8);
    const WhittakerParams wp{0.25, 1.0};
    const PqParams pq{0.3, 0.7};
    Complex lhs = whittaker_pq(z, wp, pq, {Tag::Definition});
    Complex rhs = whittaker_reflect(z, wp, pq);
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::abs(lhs));
}

TEST_CASE("transformation formula on the positive real axis") {
    const WhittakerParams wp{0.25, 1.0};
    const PqParams pq{0.3, 0.7};
    for (double z : {0.5, 1.0, 2.0}) {
        Complex lhs = whittaker_pq(Complex(z, 0.0), wp, pq, {Tag::Definition});
        Complex rhs = whittaker_reflect(Complex(z, 0.0), wp, pq);
        CHECK(std::abs(lhs - rhs) < 1e-9 * std::abs(lhs));
    }
}

TEST_CASE("derivative formula vs central finite differences") {
    const WhittakerParams wp{0.25, 1.0};
    const PqParams pq{0.4, 0.6};
    QuadConfig tight;
    tight.tol = {1e-15, 1e-13};
    const double z = 1.0, h = 1e-4;
    auto g = [&](double x) {
        Complex m = whittaker_pq(Complex(x, 0.0), wp, pq, {Tag::Int1}, tight);
        return std::exp(0.5 * x) * std::pow(x, -wp.rho - 0.5) * m;
    };
    Complex d1 = (g(z + h) - g(z - h)) / (2.0 * h);
    Complex d2 = (g(z + h) - 2.0 * g(z) + g(z - h)) / (h * h);
    Complex r1 = whittaker_derivative_formula(Complex(z, 0.0), wp, pq, 1, tight);
    Complex r2 = whittaker_derivative_formula(Complex(z, 0.0), wp, pq, 2, tight);
    CHECK(std::abs(d1 - r1) < 1e-6 * std::abs(r1));
    CHECK(std::abs(d2 - r2) < 1e-5 * std::abs(r2));
}

TEST_CASE("branch cut rejection and negative-axis escape hatch") {
    const WhittakerParams wp{0.0, 0.5};
    CHECK_THROWS_AS(whittaker_pq(Complex(-1.0, 0.0), wp, {0.1, 0.1}), BranchCutError);
    CHECK_THROWS_AS(whittaker_pq(Complex(0.0, 0.0), wp, {0.1, 0.1}), BranchCutError);
    // classical check: M_{0,1/2}(-z) under arg = pi is
    // (-z)^1 e^{z/2} 1F1(1;2;-z) = -2 sinh(z/2) continued; with arg(z)=pi,
    // z^{rho+1/2} = -1 * 1, value = -(e^{1/2} - e^{-1/2}) = -2 sinh(1/2).
    Complex v = whittaker_negative_axis(-1.0, wp, {0.0, 0.0});
    CHECK(v.real() == doctest::Approx(-2.0 * std::sinh(0.5)).epsilon(1e-10));
}

TEST_CASE("domain validation with (p,q)-relaxed order constraints") {
    // rho - lambda <= -1/2 needs p > 0; rho + lambda <= -1/2 needs q > 0.
    CHECK_THROWS_AS(whittaker_pq(Complex(1.0, 0.0), {1.2, 0.5}, {0.0, 0.1}, {Tag::Int1}),
                    DomainError);
    CHECK_NOTHROW(whittaker_pq(Complex(1.0, 0.0), {1.2, 0.5}, {0.3, 0.1}, {Tag::Int1}));
    CHECK_THROWS_AS(whittaker_pq(Complex(1.0, 0.0), {-1.2, 0.5}, {0.1, 0.0}, {Tag::Int1}),
                    DomainError);
    CHECK_NOTHROW(whittaker_pq(Complex(1.0, 0.0), {-1.2, 0.5}, {0.1, 0.3}, {Tag::Int1}));
    // rho <= -1/2 is always out
    CHECK_THROWS_AS(whittaker_pq(Complex(1.0, 0.0), {0.0, -0.5}, {0.5, 0.5}, {Tag::Int1}),
                    DomainError);
}
