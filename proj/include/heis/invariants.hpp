#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "heis/constructors.hpp"
#include "heis/curve_spec.hpp"
#include "heis/surface.hpp"

namespace heis {

/// Per-theta deformation data of the Pansu construction:
///   A = x2' cos - x1' sin,  B = x2' sin + x1' cos,
///   D = lambda*Theta(C') + (1/2lambda - B),  V = (A, 1/2lambda - B),
///   G = D/||V||,  (sin zeta, cos zeta) = V/||V||.
struct DeformationData {
    double A;
    double B;
    double D;
    double normV;
    double G;
    double zeta;  // principal value; sweeps unwrap it
};

DeformationData deformation_data(const CurveSpec& c, double lambda, double theta);

/// Sampled normalized invariants theta~ -> (zeta1, zeta2). theta_src keeps
/// the pre-normalization parameter of each sample.
struct InvariantProfile {
    std::vector<double> theta_tilde;
    std::vector<double> zeta1;
    std::vector<double> zeta2;
    std::vector<double> theta_src;
    std::string gauge_note;
    double lambda = 0.0;  // 0 for p-minimal profiles
};

/// The normal-coordinate change backing a profile: theta = Psi^{-1}(theta~)
/// and the shift Gamma(theta) with s~ = s + Gamma(theta).
struct NormalChart {
    std::function<double(double)> theta_of_ttilde;
    std::function<double(double)> gamma_of_theta;
};

struct NormalizedInvariants {
    InvariantProfile profile;
    NormalChart chart;
};

/// Theorem-C pipeline: Gamma = theta/2lambda - int D, Psi = 2lambda int ||V||
/// (adaptive Simpson, anchored to 0 at the range start; Psi inverted by
/// bisection + Newton), zeta1 = zeta - 2lambda*Gamma, zeta2 = G at
/// theta = Psi^{-1}(theta~).
NormalizedInvariants normalize_deformed(const CurveSpec& c, double lambda,
                                        std::pair<double, double> theta_range, int n_samples);

/// Closed-form p-minimal invariants of the plane deformation:
///   zeta1 = A - int (x1' cos + x2' sin),  zeta2 = Theta(C') - A^2.
std::pair<double, double> pminimal_invariants(const CurveSpec& c, double theta,
                                              double theta_start = 0.0);
NormalizedInvariants pminimal_profile(const CurveSpec& c, std::pair<double, double> theta_range,
                                      int n_samples);

/// Conserved energy of a generating curve, E = x t'/sqrt(x^2 x'^2 + t'^2)
/// + lambda x^2; invariant under curve reparametrization.
double energy(double x, double xp, double tp, double lambda);

/// Closed-form invariants of rotational surfaces, on the same chart
/// convention as normalize_deformed.
NormalizedInvariants rotational_cmc_invariants(double c, double k, double phase = 0.0,
                                               int n_samples = 129);
NormalizedInvariants rotational_minimal_invariants(double m, int n_samples = 129);

struct CrossValidateReport {
    double max_dzeta1 = 0.0;  // vs profile, mod 2pi for lambda > 0
    double max_dzeta2 = 0.0;
    double max_fit_rms = 0.0;
    int slices = 0;
    std::vector<double> ttilde;     // per converged slice
    std::vector<double> fit_zeta1;
    std::vector<double> fit_zeta2;
};

/// Re-extracts alpha numerically on normal coordinates and fits the
/// normal-form alpha per theta~ slice, reporting the worst deviation of the
/// fitted (zeta1, zeta2) from the profile.
CrossValidateReport cross_validate(const ParamSurface& surf, const NormalChart& chart,
                                   const InvariantProfile& profile, int slices = 9,
                                   int samples_per_slice = 33);

}  // namespace heis
