// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pqsf/pq_whittaker.hpp"

namespace pqsf {

struct MellinOrders {
    double r;
    double s;
};

struct LaplaceParams {
    double delta;
    double alpha;
    double mu;  // may be negative; zero is rejected
};

// Closed form of the two-parameter Mellin transform of M_{p,q;lambda,rho}(z)
// in (p,q) -> (r,s):
//   z^{rho+1/2} e^{-z/2} Gamma(r) Gamma(s)
//     * B(rho+r-lambda+1/2, rho+s+lambda+1/2) / B(rho-lambda+1/2, rho+lambda+1/2)
//     * 1F1(rho+r-lambda+1/2; 2rho+r+s+1; z).
Complex mellin_closed(Complex z, const WhittakerParams& wp, const MellinOrders& mo,
                      const SeriesPolicy& policy = {});

// Independent numeric side: the double integral
// int_0^inf int_0^inf p^{r-1} q^{s-1} M_{p,q;lambda,rho}(z) dp dq with the
// Whittaker factor evaluated through its (0,1) integral representation.
// q_outer swaps the nesting order (Fubini check). Real z > 0 only.
QuadResult mellin_numeric(double z, const WhittakerParams& wp, const MellinOrders& mo,
                          const QuadConfig& cfg = {}, bool q_outer = false);

// Closed form of the Laplace-type integral:
//   mu^{rho+1/2} Gamma(delta+rho+1/2) / (alpha+mu/2)^{delta+rho+1/2}
//     * F_{p,q}(delta+rho+1/2, rho-lambda+1/2; 2rho+1; 2mu/(2alpha+mu)).
// Complex-valued when mu < 0 (principal power of a negative base).
Complex laplace_closed(const LaplaceParams& lp, const WhittakerParams& wp, const PqParams& pq,
                       const QuadConfig& cfg = {}, const SeriesPolicy& policy = {});

// Numeric side: int_0^inf z^{delta-1} e^{-alpha z} M_{p,q;lambda,rho}(mu z) dz.
// For mu < 0 the Whittaker factor is evaluated on the negative axis with
// arg = pi, matching the closed form's branch.
QuadResult laplace_numeric(const LaplaceParams& lp, const WhittakerParams& wp,
                           const PqParams& pq, const QuadConfig& cfg = {});

// The delta = 1, mu = -1 special case written out as its own formula:
//   (-1)^{rho+1/2} Gamma(rho+3/2) / (alpha-1/2)^{rho+3/2}
//     * F_{p,q}(rho+3/2, rho-lambda+1/2; 2rho+1; 2/(1-2alpha))    (alpha > 3/2).
Complex laplace_special_case(double alpha, const WhittakerParams& wp, const PqParams& pq,
                             const QuadConfig& cfg = {}, const SeriesPolicy& policy = {});

}  // namespace pqsf
