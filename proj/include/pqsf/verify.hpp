// Copyright 2026 the pqsf authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pqsf/quadrature.hpp"

namespace pqsf::verify {

// One grid axis: a tuple of parameter names advancing together through a
// list of value tuples. Scalar axes have a single name. The grid is the
// cartesian product across axes; this lets a grid carry paired values such
// as (lambda,rho) in {(0,0.5),(0.25,1),(-0.3,0.8)} without inventing the
// off-diagonal combinations.
struct ParamAxis {
    std::vector<std::string> names;
    std::vector<std::vector<double>> values;
};

struct ParamGrid {
    std::vector<ParamAxis> axes;
};

// Flat parameter assignment for one grid point, in axis order.
struct ParamPoint {
    std::vector<std::pair<std::string, double>> values;

    double get(const std::string& name) const;
    bool has(const std::string& name) const;
    std::string to_string() const;  // "name=value;..." with 17 significant digits
};

struct IdentityReport {
    std::string identity_id;
    long points_tested = 0;
    long points_skipped = 0;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
    ParamPoint worst_point;
    bool passed = false;
};

// Sweep the named identity over the grid. Points violating the identity's
// preconditions are skipped and counted; anything else that throws
// propagates. Deterministic: same inputs give a bit-identical report.
IdentityReport run_identity(const std::string& identity_id, const ParamGrid& grid,
                            const QuadConfig& cfg = {});

// The fixed, reproducible grid each identity is verified on by default.
ParamGrid default_grid(const std::string& identity_id);

// Registered identity ids, in canonical (registration) order.
std::vector<std::string> registered_identities();

// True when the grid point satisfies the identity's preconditions
// (exposed so tests can cross-check the skip counting independently).
bool point_admissible(const std::string& identity_id, const ParamPoint& point);

}  // namespace pqsf::verify
