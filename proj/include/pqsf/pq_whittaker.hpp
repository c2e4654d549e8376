// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pqsf/pq_hyper.hpp"

namespace pqsf {

// Order parameters of M_{p,q;lambda,rho}(z): rho > -1/2 and rho +- lambda > -1/2
// (each endpoint constraint is relaxed when the matching damping parameter
// is strictly positive).
struct WhittakerParams {
    double lambda;
    double rho;
};

struct RepresentationId {
    enum class Tag {
        Definition,  // z^{rho+1/2} e^{-z/2} Phi_{p,q}(rho-lambda+1/2; 2rho+1; z)
        Int1,        // beta-type integral on (0,1), kernel exp(zt - p/t - q/(1-t))
        Int2,        // reflected integral on (0,1), kernel exp(-zu - p/(1-u) - q/u)
        Int3,        // affine image on (a,b), caller-supplied interval
        Int4,        // semi-infinite form, kernel exp(zu/(1+u) - p(1+u)/u - q(1+u))
        Int5,        // Int3 specialized to (a,b) = (-1,1)
        Reflected,   // z^{rho+1/2} e^{z/2} Phi_{q,p}(rho+lambda+1/2; 2rho+1; -z)
    };
    Tag tag = Tag::Definition;
    FiniteInterval ab{-1.0, 1.0};  // used by Int3 only
};

// Principal power base^exponent with arg(base) in (-pi, pi]; in particular
// arg(-x) = pi for x > 0. Throws on base 0 unless Re(exponent) > 0.
Complex principal_power(Complex base, Complex exponent);

// The (p,q)-Whittaker function M_{p,q;lambda,rho}(z), evaluated through the
// selected representation. All tags agree within combined tolerance. z on the
// closed negative real axis is rejected (BranchCutError); the transforms
// module reaches that region through whittaker_negative_axis below.
Complex whittaker_pq(Complex z, const WhittakerParams& wp, const PqParams& pq,
                     const RepresentationId& rep = {}, const QuadConfig& cfg = {});

// Transformation-formula right-hand side (-1)^{rho+1/2} M_{q,p;-lambda,rho}(-z).
// The prefactor uses arg(-1) = pi; the power (-z)^{rho+1/2} takes the branch
// that is the boundary limit from the upper half-plane (arg(-z) = -pi for
// real z > 0), which is the reading under which the identity holds.
Complex whittaker_reflect(Complex z, const WhittakerParams& wp, const PqParams& pq,
                          const QuadConfig& cfg = {});

// Derivative-formula right-hand side:
//   ((rho-lambda+1/2)_n / (2rho+1)_n) e^{z/2} z^{-rho-n/2-1/2}
//     * M_{p,q;lambda-n/2, rho+n/2}(z).
Complex whittaker_derivative_formula(Complex z, const WhittakerParams& wp, const PqParams& pq,
                                     int n, const QuadConfig& cfg = {});

// M at a negative real argument under the explicit convention arg(z) = pi.
// Only the Laplace-type transform needs this; ordinary callers go through
// whittaker_pq, which rejects the cut.
Complex whittaker_negative_axis(double z, const WhittakerParams& wp, const PqParams& pq,
                                const QuadConfig& cfg = {});

}  // namespace pqsf
