#pragma once

#include <string>
#include <vector>

#include "heis/surface.hpp"

namespace heis::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    double max_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string details;
};

/// HEISCMC_TOL_SCALE environment scaling (default 1) for cross-platform
/// floating-point drift.
double tol_scale();

CriterionResult codazzi_residual_sweep();     // 1
CriterionResult pansu_curvature();            // 2
CriterionResult pansu_frame_closed_forms();   // 3
CriterionResult deformation_curvature();      // 4
CriterionResult invariant_pipeline();         // 5
CriterionResult rotational_cmc_suite();       // 6
CriterionResult rotational_minimal_suite();   // 7
CriterionResult singular_sets();              // 8
CriterionResult pminimal_invariant_suite();   // 9
CriterionResult canonical_crosscheck();       // 10

std::vector<CriterionResult> run_all();

/// Ad-hoc curvature sweep for `verify h` on a single surface.
CriterionResult curvature_sweep(const ParamSurface& surf, double expected_h,
                                double tol = 1e-5);

/// Theorem-B over-parametrization oracle: max |H| on the surface of
/// revolution of x^2 = u^2 + c2, t = m u (p-minimal exactly when c2 = m^2).
double rotational_minimal_oracle(double c2, double m);

std::string report_json(const std::vector<CriterionResult>& results);

}  // namespace heis::verify
