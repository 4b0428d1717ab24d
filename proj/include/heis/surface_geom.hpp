#pragma once

#include <utility>
#include <vector>

#include "heis/surface.hpp"

namespace heis {

/// Absolute threshold on frame T-components below which a point counts as
/// singular (frame components are O(1) on the catalog surfaces).
inline constexpr double kSingularTol = 1e-8;

/// Characteristic frame and first-fundamental-form data at a regular point:
/// alpha e2 + T = a sqrt(1+alpha^2) X_u + b sqrt(1+alpha^2) X_v.
struct CharFrame {
    FrameVector e1;
    FrameVector e2;
    double alpha;
    double a;
    double b;
};

/// Frame components of the coordinate partials at (u,v).
std::pair<FrameVector, FrameVector> tangent_basis(const ParamSurface& surf, double u, double v);

/// True iff both partials are horizontal to within tau (tangent plane equals
/// the contact plane).
bool is_singular(const ParamSurface& surf, double u, double v, double tau = kSingularTol);

/// Unit horizontal vector spanning T_p(Sigma) intersected with the contact
/// plane. Sign convention: positive component along X_u, ties broken by a
/// positive component along X_v.
FrameVector characteristic_direction(const ParamSurface& surf, double u, double v);

/// Solves the 3x3 system for (alpha, a, b) at a regular point. `flip`
/// reverses the characteristic orientation (and with it the compatible
/// x-axis), negating alpha and a while leaving b unchanged.
CharFrame extract_alpha_ab(const ParamSurface& surf, double u, double v, bool flip = false);

/// p-mean curvature by integrating the characteristic direction (RK4 in
/// parameter space, arclength parametrized) and differencing e2 with a
/// 4th-order central stencil: H = -<de2/dtau, e1>.
double p_mean_curvature(const ParamSurface& surf, double u, double v, double h_step = 1e-3);

/// Closed-form p-mean curvature of a rotationally invariant surface from its
/// generating curve in Euclidean arclength parametrization (x'^2 + t'^2 = 1).
double p_mean_curvature_rotational(double x, double xp, double xpp, double tp, double tpp);

/// True iff X_u wedge X_v is nonzero (threshold 1e-10 on the wedge norm).
bool immersion_check(const ParamSurface& surf, double u, double v);

/// Norm of the wedge X_u ^ X_v in the orthonormal 2-form basis.
double wedge_norm(const FrameVector& xu, const FrameVector& xv);

struct LocusPoint {
    double u;
    double v;
    HPoint p;
};

struct LocusPolyline {
    std::vector<LocusPoint> points;
    double length3d = 0.0;  // Euclidean chord length of the embedded polyline
    bool is_point = false;
};

/// Scans the T-defect <X_v, T> along u-lines (sign-change bisection plus
/// touching-zero refinement), keeps zeros where X_u is horizontal too, and
/// chains them across v into polylines. Isolated points come out as
/// zero-length polylines.
std::vector<LocusPolyline> singular_locus(const ParamSurface& surf, int nu, int nv,
                                          double tau = kSingularTol);

}  // namespace heis
