// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#include "pqsf/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "pqsf/pq_beta.hpp"
#include "pqsf/pq_hyper.hpp"
#include "pqsf/pq_whittaker.hpp"
#include "pqsf/scalar_core.hpp"
#include "pqsf/transforms.hpp"

namespace pqsf::verify {

namespace {

using Tag = RepresentationId::Tag;

// One LHS/RHS pair produced by a check at a grid point.
struct Comparison {
    Complex lhs;
    Complex rhs;
};

struct Identity {
    std::string id;
    double abs_tol;
    double rel_tol;
    std::function<bool(const ParamPoint&)> admissible;
    std::function<std::vector<Comparison>(const ParamPoint&, const QuadConfig&)> check;
    // optional per-point override (the Laplace identity is tighter for mu > 0)
    std::function<double(const ParamPoint&)> rel_tol_for;
};

ParamAxis axis(std::string name, std::vector<double> values) {
    ParamAxis a;
    a.names = {std::move(name)};
    for (double v : values) a.values.push_back({v});
    return a;
}

ParamAxis paired_axis(std::vector<std::string> names, std::vector<std::vector<double>> values) {
    return {std::move(names), std::move(values)};
}

WhittakerParams wp_of(const ParamPoint& pt) { return {pt.get("lambda"), pt.get("rho")}; }
PqParams pq_of(const ParamPoint& pt) { return {pt.get("p"), pt.get("q")}; }

bool whittaker_admissible(const ParamPoint& pt) {
    const double z = pt.get("z");
    const double lam = pt.get("lambda");
    const double rho = pt.get("rho");
    const double p = pt.get("p");
    const double q = pt.get("q");
    if (!(z > 0.0) || p < 0.0 || q < 0.0) return false;
    if (!(rho > -0.5)) return false;
    if (p == 0.0 && !(rho - lam > -0.5)) return false;
    if (q == 0.0 && !(rho + lam > -0.5)) return false;
    return true;
}

bool whittaker_strict_admissible(const ParamPoint& pt) {
    return whittaker_admissible(pt) && pt.get("rho") - pt.get("lambda") > -0.5 &&
           pt.get("rho") + pt.get("lambda") > -0.5;
}

// Central finite differences, second order.
Complex central_diff(const std::function<Complex(double)>& g, double z, int n, double h) {
    if (n == 1) return (g(z + h) - g(z - h)) / (2.0 * h);
    return (g(z + h) - 2.0 * g(z) + g(z - h)) / (h * h);
}

// Tight configuration for finite-difference baselines: the n=2 stencil
// divides by h^2 = 1e-8, so the evaluations underneath need near machine
// accuracy.
QuadConfig tight_cfg() {
    QuadConfig c;
    c.tol = {1e-15, 1e-13};
    return c;
}

const ParamAxis kLambdaRho =
    paired_axis({"lambda", "rho"}, {{0.0, 0.5}, {0.25, 1.0}, {-0.3, 0.8}});
const ParamAxis kPqPairs = paired_axis({"p", "q"}, {{0.0, 0.0}, {0.5, 0.5}, {0.3, 0.9}});
const ParamAxis kZAxis = axis("z", {0.5, 1.0, 2.0});

ParamGrid whittaker_grid() { return {{kZAxis, kLambdaRho, kPqPairs}}; }

std::vector<Identity> build_registry() {
    std::vector<Identity> reg;

    // Every Whittaker representation evaluates to the same number.
    reg.push_back(Identity{
        "rep-equivalence", 1e-10, 1e-8, whittaker_strict_admissible,
        [](const ParamPoint& pt, const QuadConfig& cfg) {
            const Complex z(pt.get("z"), 0.0);
            const auto wp = wp_of(pt);
            const auto pq = pq_of(pt);
            std::vector<Complex> vals = {
                whittaker_pq(z, wp, pq, {Tag::Definition}, cfg),
                whittaker_pq(z, wp, pq, {Tag::Int1}, cfg),
                whittaker_pq(z, wp, pq, {Tag::Int2}, cfg),
                whittaker_pq(z, wp, pq, {Tag::Int3, {-1.0, 1.0}}, cfg),
                whittaker_pq(z, wp, pq, {Tag::Int3, {0.5, 3.0}}, cfg),
                whittaker_pq(z, wp, pq, {Tag::Int4}, cfg),
                whittaker_pq(z, wp, pq, {Tag::Int5}, cfg),
                whittaker_pq(z, wp, pq, {Tag::Reflected}, cfg),
            };
            std::vector<Comparison> out;
            for (size_t i = 0; i < vals.size(); ++i)
                for (size_t j = i + 1; j < vals.size(); ++j) out.push_back({vals[i], vals[j]});
            return out;
        },
        nullptr});

    // Reflection: definition vs the reflected Phi_{q,p} form.
    reg.push_back(Identity{
        "remark-reflection", 1e-10, 1e-8, whittaker_strict_admissible,
        [](const ParamPoint& pt, const QuadConfig& cfg) {
            const Complex z(pt.get("z"), 0.0);
            return std::vector<Comparison>{
                {whittaker_pq(z, wp_of(pt), pq_of(pt), {Tag::Definition}, cfg),
                 whittaker_pq(z, wp_of(pt), pq_of(pt), {Tag::Reflected}, cfg)}};
        },
        nullptr});

    // Transformation: M_{p,q;lambda,rho}(z) = (-1)^{rho+1/2} M_{q,p;-lambda,rho}(-z),
    // compared in complex arithmetic.
    reg.push_back(Identity{
        "theorem2-transform", 1e-10, 1e-8, whittaker_strict_admissible,
        [](const ParamPoint& pt, const QuadConfig& cfg) {
            const Complex z(pt.get("z"), 0.0);
            return std::vector<Comparison>{
                {whittaker_pq(z, wp_of(pt), pq_of(pt), {Tag::Definition}, cfg),
                 whittaker_reflect(z, wp_of(pt), pq_of(pt), cfg)}};
        },
        nullptr});

    // Phi transformation: Phi_{p,q}(b;c;z) = e^z Phi_{q,p}(c-b;c;-z).
    reg.push_back(Identity{
        "phi-transform", 1e-10, 1e-8,
        [](const ParamPoint& pt) {
            return pt.get("c") > pt.get("b") && pt.get("b") > 0.0 && pt.get("p") >= 0.0 &&
                   pt.get("q") >= 0.0;
        },
        [](const ParamPoint& pt, const QuadConfig& cfg) {
            const double b = pt.get("b");
            const double c = pt.get("c");
            const Complex z(pt.get("z"), 0.0);
            const PqParams pq = pq_of(pt);
            Complex lhs = phi_pq({{}, b, c}, z, pq, EvalMethod::Integral, cfg);
            Complex rhs = std::exp(z) * phi_pq({{}, c - b, c}, -z, {pq.q, pq.p},
                                               EvalMethod::Integral, cfg);
            return std::vector<Comparison>{{lhs, rhs}};
        },
        nullptr});

    // Phi derivative rule vs central finite differences (step 1e-4).
    reg.push_back(Identity{
        "phi-derivative", 1e-8, 1e-5,
        [](const ParamPoint& pt) {
            return pt.get("c") > pt.get("b") && pt.get("b") > 0.0 && pt.get("p") >= 0.0 &&
                   pt.get("q") >= 0.0;
        },
        [](const ParamPoint& pt, const QuadConfig&) {
            const HyperParams hp{{}, pt.get("b"), pt.get("c")};
            const PqParams pq = pq_of(pt);
            const int n = static_cast<int>(pt.get("n"));
            const double z = pt.get("z");
            const QuadConfig tc = tight_cfg();
            auto g = [&](double x) {
                return phi_pq(hp, Complex(x, 0.0), pq, EvalMethod::Integral, tc);
            };
            Complex fd = central_diff(g, z, n, 1e-4);
            Complex rule = phi_pq_derivative(hp, Complex(z, 0.0), pq, n, tc);
            return std::vector<Comparison>{{fd, rule}};
        },
        nullptr});

    // Whittaker derivative formula vs finite differences of
    // e^{z/2} z^{-rho-1/2} M_{p,q;lambda,rho}(z).
    reg.push_back(Identity{
        "derivative", 1e-8, 1e-5, whittaker_strict_admissible,
        [](const ParamPoint& pt, const QuadConfig&) {
            const auto wp = wp_of(pt);
            const auto pq = pq_of(pt);
            const int n = static_cast<int>(pt.get("n"));
            const double z = pt.get("z");
            const QuadConfig tc = tight_cfg();
            auto g = [&](double x) {
                Complex m = whittaker_pq(Complex(x, 0.0), wp, pq, {Tag::Int1}, tc);
                return std::exp(0.5 * x) * std::pow(x, -wp.rho - 0.5) * m;
            };
            Complex fd = central_diff(g, z, n, 1e-4);
            Complex rule = whittaker_derivative_formula(Complex(z, 0.0), wp, pq, n, tc);
            return std::vector<Comparison>{{fd, rule}};
        },
        nullptr});

    // Mellin transform: 2-D numeric LHS vs closed RHS. The double quadrature
    // runs at a tolerance matched to the identity's 1e-4 target.
    reg.push_back(Identity{
        "mellin", 1e-8, 1e-4,
        [](const ParamPoint& pt) {
            const double lam = pt.get("lambda");
            const double rho = pt.get("rho");
            const double r = pt.get("r");
            const double s = pt.get("s");
            return r > 0.0 && s > 0.0 && rho > -0.5 && rho - lam > -0.5 && rho + lam > -0.5 &&
                   rho + r - lam + 0.5 > 0.0 && rho + s + lam + 0.5 > 0.0 && pt.get("z") > 0.0;
        },
        [](const ParamPoint& pt, const QuadConfig& cfg) {
            const auto wp = wp_of(pt);
            const MellinOrders mo{pt.get("r"), pt.get("s")};
            const double z = pt.get("z");
            QuadConfig cfg2d = cfg;
            cfg2d.tol.abs_tol = std::max(cfg.tol.abs_tol, 1e-10);
            cfg2d.tol.rel_tol = std::max(cfg.tol.rel_tol, 1e-7);
            cfg2d.max_level = std::min(cfg.max_level, 8);
            QuadResult lhs = mellin_numeric(z, wp, mo, cfg2d);
            Complex rhs = mellin_closed(Complex(z, 0.0), wp, mo);
            return std::vector<Comparison>{{lhs.value, rhs}};
        },
        nullptr});

    // Laplace-type integral: numeric LHS vs closed RHS; tighter tolerance on
    // the mu > 0 grid, complex comparison throughout.
    reg.push_back(Identity{
        "laplace", 1e-10, 1e-5,
        [](const ParamPoint& pt) {
            const double mu = pt.get("mu");
            const double alpha = pt.get("alpha");
            const double delta = pt.get("delta");
            const double lam = pt.get("lambda");
            const double rho = pt.get("rho");
            return mu != 0.0 && delta + rho > -0.5 && rho > -0.5 && rho - lam > -0.5 &&
                   rho + lam > -0.5 && std::abs(2.0 * mu / (2.0 * alpha + mu)) < 1.0 &&
                   alpha + 0.5 * mu - std::max(mu, 0.0) > 0.0 && pt.get("p") >= 0.0 &&
                   pt.get("q") >= 0.0;
        },
        [](const ParamPoint& pt, const QuadConfig& cfg) {
            const LaplaceParams lp{pt.get("delta"), pt.get("alpha"), pt.get("mu")};
            QuadResult lhs = laplace_numeric(lp, wp_of(pt), pq_of(pt), cfg);
            Complex rhs = laplace_closed(lp, wp_of(pt), pq_of(pt), cfg);
            return std::vector<Comparison>{{lhs.value, rhs}};
        },
        [](const ParamPoint& pt) { return pt.get("mu") > 0.0 ? 1e-6 : 1e-5; }});

    // The delta=1, mu=-1 formula written out in Section-3 form equals the
    // general closed form at that point (same expression, two assemblies).
    reg.push_back(Identity{
        "laplace-s3-special", 0.0, 1e-13,
        [](const ParamPoint& pt) {
            return pt.get("alpha") > 1.5 && pt.get("rho") > -0.5 &&
                   pt.get("rho") - pt.get("lambda") > -0.5 &&
                   pt.get("rho") + pt.get("lambda") > -0.5 && pt.get("p") >= 0.0 &&
                   pt.get("q") >= 0.0;
        },
        [](const ParamPoint& pt, const QuadConfig& cfg) {
            const LaplaceParams lp{1.0, pt.get("alpha"), -1.0};
            Complex general = laplace_closed(lp, wp_of(pt), pq_of(pt), cfg);
            Complex special = laplace_special_case(pt.get("alpha"), wp_of(pt), pq_of(pt), cfg);
            return std::vector<Comparison>{{general, special}};
        },
        nullptr});

    // p=q=0 reductions to the classical functions.
    reg.push_back(Identity{
        "reduction-classical", 1e-12, 1e-10,
        [](const ParamPoint& pt) {
            return pt.get("x") > 0.0 && pt.get("y") > 0.0 && pt.get("c") > pt.get("b") &&
                   pt.get("b") > 0.0 && pt.get("z") > 0.0 && pt.get("rho") > -0.5 &&
                   pt.get("rho") - pt.get("lambda") > -0.5 &&
                   pt.get("rho") + pt.get("lambda") > -0.5;
        },
        [](const ParamPoint& pt, const QuadConfig& cfg) {
            const double x = pt.get("x");
            const double y = pt.get("y");
            const double b = pt.get("b");
            const double c = pt.get("c");
            const double z = pt.get("z");
            const auto wp = wp_of(pt);
            std::vector<Comparison> out;
            out.push_back({beta_pq({x, y}, {0.0, 0.0}, cfg).value,
                           Complex(beta_classical(x, y), 0.0)});
            out.push_back({phi_pq({{}, b, c}, Complex(z, 0.0), {0.0, 0.0},
                                  EvalMethod::Integral, cfg),
                           kummer_1f1(b, c, Complex(z, 0.0))});
            // F reduction inside the series disk
            out.push_back({f_pq({1.0, b, c}, Complex(z / 4.0, 0.0), {0.0, 0.0},
                                EvalMethod::Integral, cfg),
                           gauss_2f1(1.0, b, c, Complex(z / 4.0, 0.0))});
            Complex m = whittaker_pq(Complex(z, 0.0), wp, {0.0, 0.0}, {Tag::Int1}, cfg);
            Complex classical =
                std::pow(z, wp.rho + 0.5) * std::exp(-0.5 * z) *
                kummer_1f1(wp.rho - wp.lambda + 0.5, 2.0 * wp.rho + 1.0, Complex(z, 0.0));
            out.push_back({m, classical});
            if (wp.lambda == 0.0 && wp.rho == 0.5)
                out.push_back({m, Complex(2.0 * std::sinh(0.5 * z), 0.0)});
            return out;
        },
        nullptr});

    // M_{p,p} equals the one-parameter extended Whittaker function whose
    // kernel is written as exp(-p/(t(1-t))).
    reg.push_back(Identity{
        "reduction-p-equals-q", 1e-12, 1e-10,
        [](const ParamPoint& pt) {
            ParamPoint aug = pt;
            aug.values.emplace_back("q", pt.get("p"));
            return whittaker_admissible(aug);
        },
        [](const ParamPoint& pt, const QuadConfig& cfg) {
            const auto wp = wp_of(pt);
            const double p = pt.get("p");
            const double z = pt.get("z");
            Complex lhs = whittaker_pq(Complex(z, 0.0), wp, {p, p}, {Tag::Int1}, cfg);
            // independent route: single-p kernel, combined 1/(t(1-t)) pole
            const double ea = wp.rho - wp.lambda - 0.5;
            const double eb = wp.rho + wp.lambda - 0.5;
            Integrand f = [=](const QuadPoint& u) -> Complex {
                double e = ea * std::log(u.dist_a) + eb * std::log(u.dist_b) + z * u.x -
                           p / (u.dist_a * u.dist_b);
                return std::exp(Complex(e, 0.0));
            };
            QuadResult r = integrate_finite(f, {0.0, 1.0}, cfg);
            Complex pref = std::pow(z, wp.rho + 0.5) * std::exp(-0.5 * z) /
                           beta_classical(wp.rho - wp.lambda + 0.5, wp.rho + wp.lambda + 0.5);
            return std::vector<Comparison>{{lhs, pref * r.value}};
        },
        nullptr});

    // B_{p,q}(x,y) = B_{q,p}(y,x).
    reg.push_back(Identity{
        "beta-symmetry", 1e-12, 1e-10,
        [](const ParamPoint& pt) {
            return pt.get("p") >= 0.0 && pt.get("q") >= 0.0 &&
                   (pt.get("p") > 0.0 || pt.get("x") > 0.0) &&
                   (pt.get("q") > 0.0 || pt.get("y") > 0.0);
        },
        [](const ParamPoint& pt, const QuadConfig& cfg) {
            return std::vector<Comparison>{
                {beta_pq({pt.get("x"), pt.get("y")}, {pt.get("p"), pt.get("q")}, cfg).value,
                 beta_pq({pt.get("y"), pt.get("x")}, {pt.get("q"), pt.get("p")}, cfg).value}};
        },
        nullptr});

    // exp(-p/(t(1-t))) = exp(-p/t) exp(-p/(1-t)): the reduction is the same
    // code path and must match bit for bit.
    reg.push_back(Identity{
        "beta-p-kernel-identity", 0.0, 0.0,
        [](const ParamPoint& pt) {
            return (pt.get("p") > 0.0 || (pt.get("x") > 0.0 && pt.get("y") > 0.0));
        },
        [](const ParamPoint& pt, const QuadConfig& cfg) {
            return std::vector<Comparison>{
                {beta_p_reduction({pt.get("x"), pt.get("y")}, pt.get("p"), cfg).value,
                 beta_pq({pt.get("x"), pt.get("y")}, {pt.get("p"), pt.get("p")}, cfg).value}};
        },
        nullptr});

    return reg;
}

const std::vector<Identity>& registry() {
    static const std::vector<Identity> reg = build_registry();
    return reg;
}

const Identity& find_identity(const std::string& id) {
    for (const auto& ident : registry())
        if (ident.id == id) return ident;
    throw DomainError("unknown identity: " + id);
}

}  // namespace

double ParamPoint::get(const std::string& name) const {
    for (const auto& [k, v] : values)
        if (k == name) return v;
    throw DomainError("ParamPoint: no axis named '" + name + "'");
}

bool ParamPoint::has(const std::string& name) const {
    for (const auto& [k, v] : values)
        if (k == name) return true;
    return false;
}

std::string ParamPoint::to_string() const {
    std::string out;
    char buf[64];
    for (const auto& [k, v] : values) {
        if (!out.empty()) out += ';';
        std::snprintf(buf, sizeof(buf), "%s=%.17g", k.c_str(), v);
        out += buf;
    }
    return out;
}

IdentityReport run_identity(const std::string& identity_id, const ParamGrid& grid,
                            const QuadConfig& cfg) {
    const Identity& ident = find_identity(identity_id);
    IdentityReport rep;
    rep.identity_id = identity_id;

    if (grid.axes.empty()) throw DomainError("run_identity: grid has no axes");
    for (const auto& ax : grid.axes)
        if (ax.values.empty()) throw DomainError("run_identity: empty axis in grid");

    std::vector<size_t> idx(grid.axes.size(), 0);
    bool all_within = true;
    bool done = false;
    while (!done) {
        ParamPoint pt;
        for (size_t a = 0; a < grid.axes.size(); ++a) {
            const ParamAxis& ax = grid.axes[a];
            const auto& tuple = ax.values[idx[a]];
            for (size_t c = 0; c < ax.names.size(); ++c)
                pt.values.emplace_back(ax.names[c], tuple[c]);
        }

        if (!ident.admissible || ident.admissible(pt)) {
            ++rep.points_tested;
            const double rel_tol = ident.rel_tol_for ? ident.rel_tol_for(pt) : ident.rel_tol;
            for (const Comparison& c : ident.check(pt, cfg)) {
                const double abs_err = std::abs(c.lhs - c.rhs);
                const double scale = std::max(std::abs(c.lhs), std::abs(c.rhs));
                const double rel_err = scale > 0.0 ? abs_err / scale : 0.0;
                if (abs_err > rep.max_abs_err) rep.max_abs_err = abs_err;
                if (rel_err > rep.max_rel_err) {
                    rep.max_rel_err = rel_err;
                    rep.worst_point = pt;
                }
                if (abs_err > ident.abs_tol + rel_tol * scale) all_within = false;
            }
        } else {
            ++rep.points_skipped;
        }

        // advance mixed-radix index
        done = true;
        for (size_t a = grid.axes.size(); a-- > 0;) {
            if (++idx[a] < grid.axes[a].values.size()) {
                done = false;
                break;
            }
            idx[a] = 0;
        }
    }

    if (rep.points_tested == 0)
        throw DomainError("run_identity: empty effective grid (all points skipped)");
    rep.passed = all_within;
    return rep;
}

ParamGrid default_grid(const std::string& identity_id) {
    find_identity(identity_id);  // validates the id
    if (identity_id == "rep-equivalence" || identity_id == "remark-reflection" ||
        identity_id == "theorem2-transform")
        return whittaker_grid();
    if (identity_id == "phi-transform")
        return {{paired_axis({"b", "c"}, {{1.0, 2.0}, {1.5, 3.0}, {2.5, 4.0}}),
                 axis("z", {-2.0, -0.5, 0.5, 2.0}), axis("p", {0.0, 0.25, 1.0}),
                 axis("q", {0.0, 0.25, 1.0})}};
    if (identity_id == "phi-derivative")
        return {{axis("n", {1.0, 2.0}), paired_axis({"b", "c"}, {{1.0, 2.0}, {1.5, 3.0}}),
                 axis("z", {0.5, 1.0}),
                 paired_axis({"p", "q"}, {{0.0, 0.0}, {0.3, 0.6}})}};
    if (identity_id == "derivative")
        return {{axis("n", {1.0, 2.0}), axis("z", {0.5, 1.0}),
                 paired_axis({"lambda", "rho"}, {{0.0, 0.5}, {0.25, 1.0}}),
                 paired_axis({"p", "q"}, {{0.0, 0.0}, {0.4, 0.6}})}};
    if (identity_id == "mellin")
        return {{paired_axis({"r", "s"}, {{1.0, 1.0}, {1.5, 2.0}, {2.0, 1.0}}),
                 paired_axis({"lambda", "rho"}, {{0.0, 0.5}, {0.25, 1.0}}),
                 axis("z", {0.5, 1.0})}};
    if (identity_id == "laplace")
        return {{paired_axis({"delta", "alpha", "mu"},
                             {{1.0, 3.0, 1.0},
                              {1.5, 2.0, 0.5},
                              {2.0, 2.5, 1.0},
                              {1.0, 2.0, -1.0},
                              {1.2, 3.0, -1.0},
                              {1.0, 4.0, -2.0}}),
                 paired_axis({"lambda", "rho"}, {{0.0, 0.5}, {0.25, 1.0}}),
                 paired_axis({"p", "q"}, {{0.0, 0.0}, {0.3, 0.6}})}};
    if (identity_id == "laplace-s3-special")
        return {{axis("alpha", {2.0, 2.5, 4.0}),
                 paired_axis({"lambda", "rho"}, {{0.0, 0.5}, {0.25, 1.0}}),
                 paired_axis({"p", "q"}, {{0.0, 0.0}, {0.2, 0.4}})}};
    if (identity_id == "reduction-classical")
        return {{axis("x", {0.5, 1.0, 2.5, 4.0}), axis("y", {0.5, 1.0, 2.5, 4.0}),
                 paired_axis({"b", "c"}, {{1.0, 2.0}, {1.5, 3.0}, {2.5, 4.0}}), kZAxis,
                 kLambdaRho}};
    if (identity_id == "reduction-p-equals-q")
        return {{kZAxis, kLambdaRho, axis("p", {0.25, 0.5, 1.0})}};
    if (identity_id == "beta-symmetry")
        return {{axis("x", {0.5, 1.0, 2.0, 3.5, 4.0}), axis("y", {0.5, 1.0, 2.0, 3.5, 4.0}),
                 axis("p", {0.0, 0.5, 1.0}), axis("q", {0.0, 0.5, 1.0})}};
    if (identity_id == "beta-p-kernel-identity")
        return {{axis("x", {1.0, 2.5}), axis("y", {1.3, 2.0}), axis("p", {0.0, 0.5, 1.0})}};
    throw DomainError("default_grid: unknown identity: " + identity_id);
}

std::vector<std::string> registered_identities() {
    std::vector<std::string> ids;
    for (const auto& ident : registry()) ids.push_back(ident.id);
    return ids;
}

bool point_admissible(const std::string& identity_id, const ParamPoint& point) {
    const Identity& ident = find_identity(identity_id);
    return !ident.admissible || ident.admissible(point);
}

}  // namespace pqsf::verify
