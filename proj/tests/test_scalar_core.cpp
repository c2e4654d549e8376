// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "pqsf/scalar_core.hpp"

using namespace pqsf;

TEST_CASE("log_gamma matches known real values") {
    // Gamma(1) = Gamma(2) = 1, Gamma(0.5) = sqrt(pi), Gamma(5) = 24.
    CHECK(std::abs(log_gamma(Complex(1.0, 0.0)).real()) < 1e-14);
    CHECK(std::abs(log_gamma(Complex(2.0, 0.0)).real()) < 1e-14);
    CHECK(log_gamma(Complex(0.5, 0.0)).real() ==
          doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
    CHECK(log_gamma(Complex(5.0, 0.0)).real() ==
          doctest::Approx(std::log(24.0)).epsilon(1e-14));
    // big argument vs lgamma from libm
    CHECK(log_gamma(Complex(150.5, 0.0)).real() ==
          doctest::Approx(std::lgamma(150.5)).epsilon(1e-13));
    CHECK(log_gamma(Complex(3.7, 0.0)).imag() == 0.0);  // real axis stays real
}

TEST_CASE("log_gamma reflection covers Re < 0.5") {
    // Gamma(-0.5) = -2 sqrt(pi): ln|Gamma| = ln(2 sqrt(pi)), arg = pi branch.
    Complex lg = log_gamma(Complex(-0.5, 0.0));
    CHECK(lg.real() == doctest::Approx(std::log(2.0 * std::sqrt(M_PI))).epsilon(1e-13));
    CHECK(std::abs(std::exp(lg) - Complex(-2.0 * std::sqrt(M_PI), 0.0)) < 1e-12);
}

TEST_CASE("log_gamma pole detection") {
    CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), PoleError);
    CHECK_THROWS_AS(log_gamma(Complex(-3.0, 0.0)), PoleError);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Complex(1.0, 0.0), 0) == Complex(1.0, 0.0));
    CHECK(pochhammer(Complex(3.0, 0.0), 4).real() == doctest::Approx(360.0));  // 3*4*5*6
    CHECK(pochhammer(Complex(-2.0, 0.0), 3).real() == doctest::Approx(0.0));
    CHECK(pochhammer(Complex(0.5, 0.0), 2).real() == doctest::Approx(0.75));
}

TEST_CASE("beta_classical") {
    CHECK(beta_classical(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beta_classical(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(beta_classical(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-13));
}

TEST_CASE("kummer_1f1 special values") {
    // 1F1(a;a;z) = e^z
    Complex v = kummer_1f1(Complex(1.5, 0.0), Complex(1.5, 0.0), Complex(2.0, 0.0));
    CHECK(std::abs(v - std::exp(Complex(2.0, 0.0))) < 1e-13 * std::abs(v));
    // 1F1(1;2;z) = (e^z - 1)/z
    Complex w = kummer_1f1(Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(1.0, 0.0));
    CHECK(w.real() == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    CHECK_THROWS_AS(kummer_1f1(Complex(1.0, 0.0), Complex(-1.0, 0.0), Complex(1.0, 0.0)),
                    PoleError);
}

TEST_CASE("gauss_2f1 special values") {
    // 2F1(1,b;b;z) = 1/(1-z)
    Complex v = gauss_2f1(Complex(1.0, 0.0), Complex(2.5, 0.0), Complex(2.5, 0.0),
                          Complex(0.5, 0.0));
    CHECK(v.real() == doctest::Approx(2.0).epsilon(1e-14));
    // 2F1(a,b;c;0) = 1
    CHECK(gauss_2f1(Complex(0.3, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0),
                    Complex(0.0, 0.0)) == Complex(1.0, 0.0));
    CHECK_THROWS_AS(gauss_2f1(Complex(1.0, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0),
                              Complex(1.5, 0.0)),
                    DomainError);
}
