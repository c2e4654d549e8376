// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
//
// pqcli — evaluate the (p,q)-extended special functions and run the
// identity checks from the command line.
//
// Exit codes: 0 success, 1 identity check failed, 2 usage or domain error,
// 3 quadrature non-convergence.

#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pqsf/common.hpp"
#include "pqsf/pq_beta.hpp"
#include "pqsf/pq_hyper.hpp"
#include "pqsf/pq_whittaker.hpp"
#include "pqsf/verify.hpp"

namespace {

using namespace pqsf;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void emit_error(const std::string& kind, const std::string& message) {
    std::fprintf(stderr, "{\"error\":\"%s\",\"message\":\"%s\"}\n", kind.c_str(),
                 json_escape(message).c_str());
}

struct OutputOptions {
    std::string format = "jsonl";  // jsonl | csv
};

// ---- eval ----------------------------------------------------------------

void print_value(const OutputOptions& out, const std::string& function,
                 const std::vector<std::pair<std::string, double>>& args, Complex value) {
    if (out.format == "csv") {
        std::string head = "function", row = function;
        for (const auto& [k, v] : args) {
            head += "," + k;
            row += "," + fmt(v);
        }
        std::printf("%s,re,im\n%s,%s,%s\n", head.c_str(), row.c_str(), fmt(value.real()).c_str(),
                    fmt(value.imag()).c_str());
    } else {
        std::string fields;
        for (const auto& [k, v] : args) fields += ",\"" + k + "\":" + fmt(v);
        std::printf("{\"function\":\"%s\"%s,\"re\":%s,\"im\":%s}\n", function.c_str(),
                    fields.c_str(), fmt(value.real()).c_str(), fmt(value.imag()).c_str());
    }
}

// ---- check ---------------------------------------------------------------

void print_report_csv_header() {
    std::printf(
        "identity_id,points_tested,points_skipped,max_abs_err,max_rel_err,worst_point,passed\n");
}

void print_report(const OutputOptions& out, const verify::IdentityReport& r) {
    if (out.format == "csv") {
        std::printf("%s,%ld,%ld,%s,%s,%s,%s\n", r.identity_id.c_str(), r.points_tested,
                    r.points_skipped, fmt(r.max_abs_err).c_str(), fmt(r.max_rel_err).c_str(),
                    r.worst_point.to_string().c_str(), r.passed ? "true" : "false");
    } else {
        std::printf(
            "{\"identity_id\":\"%s\",\"points_tested\":%ld,\"points_skipped\":%ld,"
            "\"max_abs_err\":%s,\"max_rel_err\":%s,\"worst_point\":\"%s\",\"passed\":%s}\n",
            r.identity_id.c_str(), r.points_tested, r.points_skipped, fmt(r.max_abs_err).c_str(),
            fmt(r.max_rel_err).c_str(), r.worst_point.to_string().c_str(),
            r.passed ? "true" : "false");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(p,q)-extended beta, hypergeometric and Whittaker functions"};
    app.require_subcommand(1);

    OutputOptions out;
    QuadConfig cfg;
    app.add_option("--format", out.format, "Output format: jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}))
        ->capture_default_str();
    app.add_option("--tol-abs", cfg.tol.abs_tol, "Absolute quadrature tolerance")
        ->capture_default_str();
    app.add_option("--tol-rel", cfg.tol.rel_tol, "Relative quadrature tolerance")
        ->capture_default_str();
    app.add_option("--max-level", cfg.max_level, "Maximum quadrature refinement level")
        ->capture_default_str();

    // eval
    auto* eval = app.add_subcommand("eval", "Evaluate one function at one point");
    std::string function;
    double p = 0.0, q = 0.0, x = 1.0, y = 1.0, b = 1.0, c = 2.0, a = 1.0, z = 1.0;
    double lambda = 0.0, rho = 0.5;
    std::string method = "integral";
    eval->add_option("function", function, "One of: beta, phi, f, whittaker")
        ->required()
        ->check(CLI::IsMember({"beta", "phi", "f", "whittaker"}));
    eval->add_option("--p", p, "Extension parameter p (>= 0)")->capture_default_str();
    eval->add_option("--q", q, "Extension parameter q (>= 0)")->capture_default_str();
    eval->add_option("--x", x, "beta: first argument")->capture_default_str();
    eval->add_option("--y", y, "beta: second argument")->capture_default_str();
    eval->add_option("--a", a, "f: numerator parameter a")->capture_default_str();
    eval->add_option("--b", b, "phi/f: parameter b")->capture_default_str();
    eval->add_option("--c", c, "phi/f: parameter c")->capture_default_str();
    eval->add_option("--z", z, "phi/f/whittaker: argument z")->capture_default_str();
    eval->add_option("--lambda", lambda, "whittaker: lambda")->capture_default_str();
    eval->add_option("--rho", rho, "whittaker: rho")->capture_default_str();
    eval->add_option("--method", method, "phi/f: integral or series")
        ->check(CLI::IsMember({"integral", "series"}))
        ->capture_default_str();

    // check
    auto* check = app.add_subcommand("check", "Run identity checks over their default grids");
    std::vector<std::string> ids;
    bool list_ids = false;
    check->add_option("identities", ids, "Identity ids (default: all)");
    check->add_flag("--list", list_ids, "List registered identity ids and exit");

    // table
    auto* table = app.add_subcommand("table", "Tabulate a function over a range of z");
    std::string tfunction;
    double z_min = 0.5, z_max = 2.0;
    int steps = 4;
    table->add_option("function", tfunction, "One of: beta, phi, f, whittaker")
        ->required()
        ->check(CLI::IsMember({"beta", "phi", "f", "whittaker"}));
    table->add_option("--z-min", z_min, "Start of the z range")->capture_default_str();
    table->add_option("--z-max", z_max, "End of the z range")->capture_default_str();
    table->add_option("--steps", steps, "Number of steps (points = steps + 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    table->add_option("--p", p, "Extension parameter p (>= 0)")->capture_default_str();
    table->add_option("--q", q, "Extension parameter q (>= 0)")->capture_default_str();
    table->add_option("--x", x, "beta: first argument (y = z)")->capture_default_str();
    table->add_option("--a", a, "f: numerator parameter a")->capture_default_str();
    table->add_option("--b", b, "phi/f: parameter b")->capture_default_str();
    table->add_option("--c", c, "phi/f: parameter c")->capture_default_str();
    table->add_option("--lambda", lambda, "whittaker: lambda")->capture_default_str();
    table->add_option("--rho", rho, "whittaker: rho")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    const EvalMethod em = method == "series" ? EvalMethod::Series : EvalMethod::Integral;

    auto evaluate = [&](const std::string& fn, double zz) -> Complex {
        if (fn == "beta") return beta_pq({x, zz}, {p, q}, cfg).value;
        if (fn == "phi") return phi_pq({{}, b, c}, Complex(zz, 0.0), {p, q}, em, cfg);
        if (fn == "f")
            return f_pq({Complex(a, 0.0), b, c}, Complex(zz, 0.0), {p, q}, em, cfg);
        return whittaker_pq(Complex(zz, 0.0), {lambda, rho}, {p, q},
                            {RepresentationId::Tag::Int1}, cfg);
    };

    try {
        if (*eval) {
            std::vector<std::pair<std::string, double>> args = {{"p", p}, {"q", q}};
            Complex v;
            if (function == "beta") {
                v = beta_pq({x, y}, {p, q}, cfg).value;
                args.insert(args.begin(), {{"x", x}, {"y", y}});
            } else if (function == "phi") {
                v = phi_pq({{}, b, c}, Complex(z, 0.0), {p, q}, em, cfg);
                args.insert(args.begin(), {{"b", b}, {"c", c}, {"z", z}});
            } else if (function == "f") {
                v = f_pq({Complex(a, 0.0), b, c}, Complex(z, 0.0), {p, q}, em, cfg);
                args.insert(args.begin(), {{"a", a}, {"b", b}, {"c", c}, {"z", z}});
            } else {
                v = whittaker_pq(Complex(z, 0.0), {lambda, rho}, {p, q},
                                 {RepresentationId::Tag::Int1}, cfg);
                args.insert(args.begin(), {{"lambda", lambda}, {"rho", rho}, {"z", z}});
            }
            print_value(out, function, args, v);
            return 0;
        }

        if (*check) {
            if (list_ids) {
                for (const auto& id : verify::registered_identities())
                    std::printf("%s\n", id.c_str());
                return 0;
            }
            if (ids.empty()) ids = verify::registered_identities();
            if (out.format == "csv") print_report_csv_header();
            bool all_passed = true;
            for (const auto& id : ids) {
                verify::IdentityReport r = verify::run_identity(id, verify::default_grid(id), cfg);
                print_report(out, r);
                all_passed = all_passed && r.passed;
            }
            return all_passed ? 0 : 1;
        }

        if (*table) {
            if (out.format == "csv") std::printf("z,re,im\n");
            for (int i = 0; i <= steps; ++i) {
                const double zz = z_min + (z_max - z_min) * i / steps;
                Complex v = evaluate(tfunction, zz);
                if (out.format == "csv")
                    std::printf("%s,%s,%s\n", fmt(zz).c_str(), fmt(v.real()).c_str(),
                                fmt(v.imag()).c_str());
                else
                    std::printf("{\"z\":%s,\"re\":%s,\"im\":%s}\n", fmt(zz).c_str(),
                                fmt(v.real()).c_str(), fmt(v.imag()).c_str());
            }
            return 0;
        }
    } catch (const ConvergenceError& e) {
        emit_error("convergence", e.what());
        return 3;
    } catch (const DomainError& e) {
        emit_error("domain", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 2;
    }
    return 2;
}
