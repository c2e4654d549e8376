// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pqsf/pq_beta.hpp"
#include "pqsf/scalar_core.hpp"

namespace pqsf {

// Parameters of F_{p,q}(a,b;c;z) / Phi_{p,q}(b;c;z); requires c > b > 0.
// `a` is ignored by the confluent function.
struct HyperParams {
    Complex a{};
    double b;
    double c;
};

enum class EvalMethod {
    Integral,  // one quadrature total; the default path
    Series,    // one beta_pq quadrature per term; independent cross-check
};

// (p,q)-confluent hypergeometric function Phi_{p,q}(b;c;z).
Complex phi_pq(const HyperParams& hp, Complex z, const PqParams& pq,
               EvalMethod method = EvalMethod::Integral, const QuadConfig& cfg = {},
               const SeriesPolicy& policy = {});

// (p,q)-hypergeometric function F_{p,q}(a,b;c;z). Series needs |z| < 1;
// the integral form needs z off [1,inf).
Complex f_pq(const HyperParams& hp, Complex z, const PqParams& pq,
             EvalMethod method = EvalMethod::Integral, const QuadConfig& cfg = {},
             const SeriesPolicy& policy = {});

// n-th derivative of Phi_{p,q} in z via the parameter-shift rule
// d^n/dz^n Phi_{p,q}(b;c;z) = ((b)_n/(c)_n) Phi_{p,q}(b+n;c+n;z).
Complex phi_pq_derivative(const HyperParams& hp, Complex z, const PqParams& pq, int n,
                          const QuadConfig& cfg = {}, const SeriesPolicy& policy = {});

}  // namespace pqsf
