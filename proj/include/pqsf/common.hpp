// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace pqsf {

using Complex = std::complex<double>;

// Argument outside a function's domain (bad parameters, unsatisfiable
// preconditions). CLI maps this family to exit code 2.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Evaluation point on the closed negative real axis, where the principal
// power z^{rho+1/2} is not defined without an explicit branch convention.
class BranchCutError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Gamma-type pole at a nonpositive integer.
class PoleError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Series or quadrature failed to meet its stop criterion. CLI exit code 3.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An integrand sample came back NaN/Inf (overflow; underflow-to-zero is fine).
class NonFiniteError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ToleranceSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;

    bool close(double a, double b) const {
        return std::abs(a - b) <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
    }
    bool close(const Complex& a, const Complex& b) const {
        return std::abs(a - b) <= abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
    }
};

// Truncation control for the hypergeometric power series. Convergence is
// declared only after `consecutive_small` successive terms fall below
// stop_ratio * |partial sum|.
struct SeriesPolicy {
    int max_terms = 500;
    double stop_ratio = 1e-16;
    int consecutive_small = 3;
};

}  // namespace pqsf
