// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#include "pqsf/scalar_core.hpp"

#include <cmath>
#include <functional>

namespace pqsf {

namespace {

constexpr double kLogTwoPi = 1.8378770664093454836;  // ln(2*pi)

// Lanczos approximation, g = 7, 9 terms. Relative accuracy a few 1e-15
// across the real range used here (0, 170).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool is_nonpositive_integer(const Complex& x) {
    if (x.imag() != 0.0) return false;
    double r = x.real();
    return r <= 0.0 && r == std::floor(r);
}

Complex log_gamma_lanczos(Complex x) {
    // valid for Re(x) >= 0.5
    x -= 1.0;
    Complex acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x + static_cast<double>(i));
    Complex t = x + 7.5;
    return 0.5 * kLogTwoPi + (x + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

Complex log_gamma(Complex x) {
    if (is_nonpositive_integer(x))
        throw PoleError("log_gamma: pole at nonpositive integer " + std::to_string(x.real()));
    if (x.real() >= 0.5) {
        Complex v = log_gamma_lanczos(x);
        if (x.imag() == 0.0) v = Complex(v.real(), 0.0);  // real axis stays real
        return v;
    }
    // reflection: ln Gamma(x) = ln pi - ln sin(pi x) - ln Gamma(1 - x)
    const double pi = 3.14159265358979323846;
    Complex v = std::log(pi / std::sin(pi * x)) - log_gamma_lanczos(1.0 - x);
    if (x.imag() == 0.0 && std::sin(pi * x.real()) > 0.0) v = Complex(v.real(), 0.0);
    return v;
}

Complex pochhammer(Complex lam, int n) {
    if (n < 0) throw DomainError("pochhammer: n must be >= 0");
    Complex prod = 1.0;
    for (int k = 0; k < n; ++k) prod *= lam + static_cast<double>(k);
    return prod;
}

double beta_classical(double x, double y) {
    if (!(x > 0.0) || !(y > 0.0))
        throw DomainError("beta_classical: arguments must be positive");
    return std::exp((log_gamma(x) + log_gamma(y) - log_gamma(x + y)).real());
}

namespace {

// Shared series driver: `ratio(n)` maps term_n to term_{n+1}.
Complex sum_hyper_series(const std::function<Complex(int)>& ratio, const SeriesPolicy& policy,
                         const char* what) {
    Complex term = 1.0;
    Complex sum = 1.0;
    int small_run = 0;
    for (int n = 0; n < policy.max_terms; ++n) {
        term *= ratio(n);
        sum += term;
        if (std::abs(term) <= policy.stop_ratio * std::abs(sum)) {
            if (++small_run >= policy.consecutive_small) return sum;
        } else {
            small_run = 0;
        }
    }
    throw ConvergenceError(std::string(what) + ": series did not converge within max_terms");
}

void check_c_parameter(const Complex& c, const char* what) {
    if (c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::floor(c.real()))
        throw PoleError(std::string(what) + ": c is a nonpositive integer");
}

}  // namespace

Complex kummer_1f1(Complex a, Complex c, Complex z, const SeriesPolicy& policy) {
    check_c_parameter(c, "kummer_1f1");
    if (z == Complex(0.0)) return 1.0;
    auto ratio = [&](int n) {
        double dn = static_cast<double>(n);
        return (a + dn) / (c + dn) * z / (dn + 1.0);
    };
    return sum_hyper_series(ratio, policy, "kummer_1f1");
}

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z, const SeriesPolicy& policy) {
    check_c_parameter(c, "gauss_2f1");
    if (std::abs(z) >= 1.0 && z != Complex(0.0))
        throw DomainError("gauss_2f1: series requires |z| < 1");
    if (z == Complex(0.0)) return 1.0;
    auto ratio = [&](int n) {
        double dn = static_cast<double>(n);
        return (a + dn) * (b + dn) / (c + dn) * z / (dn + 1.0);
    };
    return sum_hyper_series(ratio, policy, "gauss_2f1");
}

}  // namespace pqsf
