#pragma once

#include <optional>
#include <string>

#include "heis/curve_spec.hpp"
#include "heis/surface.hpp"

namespace heis {

/// Pansu-sphere profile (x(s), y(s), t(s)) and its derivatives.
struct PansuProfile {
    double lambda;

    HPoint at(double s) const;
    CartVector d1(double s) const;

    HPoint north_pole() const { return {0, 0, 0.25 * 3.141592653589793238462643383279 / (lambda * lambda)}; }
};

/// The Pansu sphere of curvature 2*lambda, parametrized over
/// s in [0, pi/lambda], theta in [0, 2*pi]. Rows s=0 and s=pi/lambda are the
/// poles.
ParamSurface pansu(double lambda);

/// Generating curve (x(s~), t(s~)) in the horizontal arclength parameter.
/// For c != 0:   x^2 = k/c^2 + r cos(c s~ + phase), t = -s~/c - (r/2) sin(c s~ + phase)
/// For c == 0:   x^2 = s~^2 + m^2,                  t = m s~
struct GeneratingCurve {
    double c = 0.0;
    double k = 0.0;
    double r = 0.0;
    double energy = 0.0;
    double phase = 0.0;  // c1 of the x^2 expansion
    double m = 0.0;      // minimal family parameter
    double c2_minimal = 0.0;  // = m^2, forced by the unit horizontal speed identity

    double x(double st) const;
    double t(double st) const;
    double x_d1(double st) const;
    double t_d1(double st) const;
    double x_d2(double st) const;
    double t_d2(double st) const;
};

struct RotationalSurface {
    ParamSurface surface;
    GeneratingCurve curve;
};

/// Rotationally invariant surface with H = c != 0, built by rotating the
/// horizontal geodesic with base point chosen so the generating curve matches
/// the (k, r) normal form; phase rotates the base point.
RotationalSurface rotational_cmc(double c, double k, double phase = 0.0);

/// Rotationally invariant p-minimal surface: rotation of a horizontal line
/// at distance |m| from the axis (m = 0 gives the horizontal plane t = 0).
RotationalSurface rotational_minimal(double m);

struct DeformedSurface {
    ParamSurface surface;
    CurveSpec curve;
    double lambda = 0.0;  // 0 marks the p-minimal plane deformation
};

/// Deformation of the Pansu sphere along C: Y(s,theta) = C(theta) o X(s,theta).
/// Throws NotImmersed when the wedge vanishes somewhere on the sampled domain.
DeformedSurface deform_pansu(const CurveSpec& c, double lambda,
                             std::optional<Rectangle> domain = std::nullopt);

/// Deformation of the plane u = 0 along C (p-minimal construction).
DeformedSurface deform_plane(const CurveSpec& c, std::optional<Rectangle> domain = std::nullopt);

struct CatalogParams {
    double lambda = 1.0;
    double r = 0.25;
    double k = 2.0;
    double m = 1.0;
    double z1 = -2.0;
    double c3 = 0.0, c4 = 0.0, c6 = 0.0;  // lnsectan left-translation offsets
};

enum class CatalogKind { Cmc, PMinimal };

struct CatalogEntry {
    CurveSpec curve;
    CatalogKind kind;
    Rectangle default_domain;  // (u, theta) ranges suited to the curve
};

/// Curves of the example tables, with closed-form derivative terms:
/// pansu_trivial, prop_c2value, prop_c1linear, prop_indepc1, lnsectan,
/// pmin_rotlike, degenerate_special1.
CatalogEntry catalog(const std::string& name, const CatalogParams& params = {});

}  // namespace heis
