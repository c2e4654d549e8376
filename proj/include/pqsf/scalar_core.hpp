// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pqsf/common.hpp"

namespace pqsf {

// Principal branch of ln Gamma(x). Real x > 0 gives a real result.
// Throws PoleError at nonpositive integers.
Complex log_gamma(Complex x);

// Rising factorial (lam)_n = lam (lam+1) ... (lam+n-1); product form, total.
Complex pochhammer(Complex lam, int n);

// Classical beta B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y) via log_gamma.
double beta_classical(double x, double y);

// Kummer's 1F1(a;c;z), truncated power series. Converges for all finite z.
Complex kummer_1f1(Complex a, Complex c, Complex z, const SeriesPolicy& policy = {});

// Gauss 2F1(a,b;c;z), series form, |z| < 1 only.
Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z, const SeriesPolicy& policy = {});

}  // namespace pqsf
