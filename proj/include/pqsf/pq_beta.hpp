// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pqsf/quadrature.hpp"

namespace pqsf {

// Regularization pair entering exp(-p/t - q/(1-t)). Both nonnegative.
struct PqParams {
    double p;
    double q;
};

struct BetaArgs {
    double x;
    double y;
};

// Validates the coupled invariant: p,q >= 0; x > 0 required only when p = 0,
// y > 0 only when q = 0 (the exponential damping absorbs any power).
void validate_beta_domain(const BetaArgs& args, const PqParams& pq);

// Extended beta B_{p,q}(x,y) = int_0^1 t^{x-1}(1-t)^{y-1} exp(-p/t - q/(1-t)) dt.
QuadResult beta_pq(const BetaArgs& args, const PqParams& pq, const QuadConfig& cfg = {});

// One-parameter reduction B_p(x,y): kernel exp(-p/(t(1-t))). Identical to
// B_{p,p} since 1/(t(1-t)) = 1/t + 1/(1-t); returns beta_pq(args, {p,p}).
QuadResult beta_p_reduction(const BetaArgs& args, double p, const QuadConfig& cfg = {});

}  // namespace pqsf
