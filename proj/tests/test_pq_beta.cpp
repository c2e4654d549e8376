// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "pqsf/pq_beta.hpp"
#include "pqsf/scalar_core.hpp"

using namespace pqsf;

// Golden value computed with an independent composite-Simpson oracle
// (1e6 panels, truncation 1e-8; the exponential kernel kills both tails)
// and cross-checked with 25-digit adaptive quadrature:
// B_{1,1}(1,1) = 0.0070298584066096562392...
static constexpr double kB11 = 0.0070298584066096562392;

TEST_CASE("beta_pq golden value") {
    QuadResult r = beta_pq({1.0, 1.0}, {1.0, 1.0});
    CHECK(r.converged);
    CHECK(r.value.real() == doctest::Approx(kB11).epsilon(1e-12));
    CHECK(r.value.imag() == 0.0);
}

TEST_CASE("p=q=0 reduces to the classical beta") {
    for (auto [x, y] : {std::pair{1.0, 1.0}, {2.0, 3.0}, {0.5, 0.5}, {0.5, 4.0}}) {
        QuadResult r = beta_pq({x, y}, {0.0, 0.0});
        CHECK(r.value.real() ==
              doctest::Approx(beta_classical(x, y)).epsilon(1e-11));
    }
}

TEST_CASE("symmetry B_{p,q}(x,y) = B_{q,p}(y,x)") {
    QuadResult lhs = beta_pq({1.2, 2.7}, {0.4, 0.9});
    QuadResult rhs = beta_pq({2.7, 1.2}, {0.9, 0.4});
    CHECK(lhs.value.real() == doctest::Approx(rhs.value.real()).epsilon(1e-12));
}

TEST_CASE("positive p,q admits nonpositive arguments") {
    // The damping makes the integral converge even for x,y <= 0.
    QuadResult r = beta_pq({-0.5, -1.0}, {0.5, 0.5});
    CHECK(r.converged);
    CHECK(r.value.real() > 0.0);
    CHECK(std::isfinite(r.value.real()));
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(beta_pq({1.0, 1.0}, {-0.1, 0.0}), DomainError);
    CHECK_THROWS_AS(beta_pq({1.0, 1.0}, {0.0, -1.0}), DomainError);
    CHECK_THROWS_AS(beta_pq({0.0, 1.0}, {0.0, 1.0}), DomainError);  // x<=0 needs p>0
    CHECK_THROWS_AS(beta_pq({1.0, -2.0}, {1.0, 0.0}), DomainError);  // y<=0 needs q>0
    CHECK_NOTHROW(beta_pq({-1.0, 1.0}, {0.1, 0.0}));
}

TEST_CASE("beta_p_reduction is bit-identical to B_{p,p}") {
    for (double p : {0.0, 0.3, 1.0, 2.5}) {
        QuadResult a = beta_p_reduction({1.5, 2.25}, p);
        QuadResult b = beta_pq({1.5, 2.25}, {p, p});
        CHECK(a.value.real() == b.value.real());
        CHECK(a.value.imag() == b.value.imag());
        CHECK(a.evaluations == b.evaluations);
    }
}

TEST_CASE("monotone decay in p") {
    double b0 = beta_pq({2.0, 2.0}, {0.0, 0.0}).value.real();
    double b1 = beta_pq({2.0, 2.0}, {0.5, 0.0}).value.real();
    double b2 = beta_pq({2.0, 2.0}, {1.5, 0.0}).value.real();
    CHECK(b0 > b1);
    CHECK(b1 > b2);
    CHECK(b2 > 0.0);
}
