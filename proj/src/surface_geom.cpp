#include "heis/surface_geom.hpp"

#include <algorithm>
#include <cmath>

#include "heis/errors.hpp"

namespace heis {

namespace {

struct Basis {
    FrameVector xu, xv;
};

Basis basis_at(const ParamSurface& surf, double u, double v) {
    const SurfaceJet j = surf.jet(u, v);
    return {cart_to_frame(j.p, j.du), cart_to_frame(j.p, j.dv)};
}

/// Parameter-space direction (du,dv) whose pushforward is horizontal and of
/// unit adapted norm. Returns false at singular points.
bool param_char_direction(const Basis& b, double& du, double& dv) {
    du = -b.xv.c0;
    dv = b.xu.c0;
    const double scale = std::max({std::abs(b.xu.c0), std::abs(b.xv.c0), 1e-300});
    if (scale <= kSingularTol) return false;
    const FrameVector w = du * b.xu + dv * b.xv;
    const double n = frame_norm(w);
    if (n < 1e-14 * scale) return false;
    du /= n;
    dv /= n;
    return true;
}

FrameVector push(const Basis& b, double du, double dv) { return du * b.xu + dv * b.xv; }

}  // namespace

std::pair<FrameVector, FrameVector> tangent_basis(const ParamSurface& surf, double u, double v) {
    const Basis b = basis_at(surf, u, v);
    return {b.xu, b.xv};
}

bool is_singular(const ParamSurface& surf, double u, double v, double tau) {
    const Basis b = basis_at(surf, u, v);
    return std::abs(b.xu.c0) <= tau && std::abs(b.xv.c0) <= tau;
}

FrameVector characteristic_direction(const ParamSurface& surf, double u, double v) {
    const Basis b = basis_at(surf, u, v);
    double du, dv;
    if (!param_char_direction(b, du, dv)) throw SingularPoint("no characteristic direction");
    FrameVector w = push(b, du, dv);
    w.c0 = 0.0;  // horizontal by construction, clear roundoff
    const double n = frame_norm(w);
    if (n == 0.0) throw DegenerateBasis("zero characteristic vector");
    w = (1.0 / n) * w;
    const double along_u = adapted_inner(w, b.xu);
    if (along_u < 0 || (std::abs(along_u) <= 1e-14 && adapted_inner(w, b.xv) < 0)) w = -w;
    return w;
}

CharFrame extract_alpha_ab(const ParamSurface& surf, double u, double v, bool flip) {
    Basis b = basis_at(surf, u, v);
    if (std::abs(b.xu.c0) <= kSingularTol && std::abs(b.xv.c0) <= kSingularTol)
        throw SingularPoint("tangent plane coincides with the contact plane");

    FrameVector e1 = characteristic_direction(surf, u, v);
    if (flip) {
        e1 = -e1;
        b.xu = -b.xu;  // reversing e1 reverses the compatible x-axis
    }
    const FrameVector e2 = j_apply(e1);

    // Solve A*Xu + B*Xv - alpha*e2 = T componentwise (Cramer).
    const double m[3][3] = {{b.xu.c1, b.xv.c1, -e2.c1},
                            {b.xu.c2, b.xv.c2, -e2.c2},
                            {b.xu.c0, b.xv.c0, 0.0}};
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    double scale = 0.0;
    for (const auto& row : m)
        for (double x : row) scale = std::max(scale, std::abs(x));
    if (std::abs(det) <= 1e-14 * scale * scale * scale)
        throw DegenerateBasis("immersion failure in extract_alpha_ab");

    // rhs = (0, 0, 1)
    const double inv_det = 1.0 / det;
    const double big_a = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * inv_det;
    const double big_b = -(m[0][0] * m[1][2] - m[0][2] * m[1][0]) * inv_det;
    const double alpha = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * inv_det;
    if (std::abs(big_a) > 1e12 || std::abs(big_b) > 1e12 || std::abs(alpha) > 1e12)
        throw NearBlowup("first fundamental form degenerates here");

    const double norm = std::sqrt(1.0 + alpha * alpha);
    return {e1, e2, alpha, big_a / norm, big_b / norm};
}

namespace {

struct ParamDir {
    double du, dv;
};

/// Unit characteristic direction in parameter space, sign-aligned with ref.
ParamDir aligned_direction(const ParamSurface& surf, double u, double v, const ParamDir& ref) {
    if (!surf.contains(u, v)) throw DomainExceeded("characteristic step left the domain");
    const Basis b = basis_at(surf, u, v);
    double du, dv;
    if (!param_char_direction(b, du, dv)) throw SingularPoint("leaf hit a singular point");
    if (du * ref.du + dv * ref.dv < 0) {
        du = -du;
        dv = -dv;
    }
    return {du, dv};
}

struct ParamPoint {
    double u, v;
};

ParamPoint rk4_step(const ParamSurface& surf, ParamPoint p, double h, const ParamDir& ref) {
    const ParamDir k1 = aligned_direction(surf, p.u, p.v, ref);
    const ParamDir k2 = aligned_direction(surf, p.u + 0.5 * h * k1.du, p.v + 0.5 * h * k1.dv, ref);
    const ParamDir k3 = aligned_direction(surf, p.u + 0.5 * h * k2.du, p.v + 0.5 * h * k2.dv, ref);
    const ParamDir k4 = aligned_direction(surf, p.u + h * k3.du, p.v + h * k3.dv, ref);
    return {p.u + h / 6.0 * (k1.du + 2 * k2.du + 2 * k3.du + k4.du),
            p.v + h / 6.0 * (k1.dv + 2 * k2.dv + 2 * k3.dv + k4.dv)};
}

}  // namespace

double p_mean_curvature(const ParamSurface& surf, double u, double v, double h_step) {
    const FrameVector e1_base = characteristic_direction(surf, u, v);

    // Reference parameter-space direction matching e1_base's sign.
    const Basis b0 = basis_at(surf, u, v);
    double du, dv;
    param_char_direction(b0, du, dv);
    if (adapted_inner(push(b0, du, dv), e1_base) < 0) {
        du = -du;
        dv = -dv;
    }
    const ParamDir fwd{du, dv};

    ParamPoint pts[5];
    pts[2] = {u, v};
    pts[3] = rk4_step(surf, pts[2], h_step, fwd);
    pts[4] = rk4_step(surf, pts[3], h_step, fwd);
    pts[1] = rk4_step(surf, pts[2], -h_step, fwd);
    pts[0] = rk4_step(surf, pts[1], -h_step, fwd);

    FrameVector e2s[5];
    for (int i = 0; i < 5; ++i) {
        FrameVector e1 = characteristic_direction(surf, pts[i].u, pts[i].v);
        if (adapted_inner(e1, e1_base) < 0) e1 = -e1;
        e2s[i] = j_apply(e1);
    }

    // 4th-order central difference of e2 along arclength; the connection is
    // flat in the left-invariant frame.
    const FrameVector de2 =
        (1.0 / (12.0 * h_step)) * (e2s[0] - 8.0 * e2s[1] + 8.0 * e2s[3] - e2s[4]);
    return -adapted_inner(de2, e1_base);
}

double p_mean_curvature_rotational(double x, double xp, double xpp, double tp, double tpp) {
    if (x <= 0.0) throw AxisContact("generating curve touches the rotation axis");
    const double den = x * x * xp * xp + tp * tp;
    if (den <= 1e-300) throw CharacteristicPoint("x^2 x'^2 + t'^2 vanishes");
    return -(x * x * x * (xp * tpp - xpp * tp) + tp * tp * tp) / (x * std::pow(den, 1.5));
}

double wedge_norm(const FrameVector& xu, const FrameVector& xv) {
    const double c12 = xu.c1 * xv.c2 - xu.c2 * xv.c1;
    const double c10 = xu.c1 * xv.c0 - xu.c0 * xv.c1;
    const double c20 = xu.c2 * xv.c0 - xu.c0 * xv.c2;
    return std::sqrt(c12 * c12 + c10 * c10 + c20 * c20);
}

bool immersion_check(const ParamSurface& surf, double u, double v) {
    const Basis b = basis_at(surf, u, v);
    return wedge_norm(b.xu, b.xv) > 1e-10;
}

namespace {

double t_defect(const ParamSurface& surf, double u, double v) {
    const SurfaceJet j = surf.jet(u, v);
    return cart_to_frame(j.p, j.dv).c0;
}

double u_defect(const ParamSurface& surf, double u, double v) {
    const SurfaceJet j = surf.jet(u, v);
    return cart_to_frame(j.p, j.du).c0;
}

/// Minimizes |d| over [a,b] by golden-section search; returns argmin.
double minimize_abs_defect(const ParamSurface& surf, double v, double a, double b) {
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = std::abs(t_defect(surf, x1, v)), f2 = std::abs(t_defect(surf, x2, v));
    for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = std::abs(t_defect(surf, x1, v));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = std::abs(t_defect(surf, x2, v));
        }
    }
    return 0.5 * (a + b);
}

double bisect_defect(const ParamSurface& surf, double v, double a, double b) {
    double fa = t_defect(surf, a, v);
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = t_defect(surf, m, v);
        if (fm == 0.0) return m;
        if ((fa < 0) != (fm < 0))
            b = m;
        else {
            a = m;
            fa = fm;
        }
        if (b - a <= 1e-15 * std::max(1.0, std::abs(a) + std::abs(b))) break;
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<LocusPolyline> singular_locus(const ParamSurface& surf, int nu, int nv, double tau) {
    if (nu < 8 || nv < 8) throw Error("InvalidGrid", "singular_locus needs at least 8x8 samples");
    const Rectangle& dom = surf.domain;
    const double du_grid = (dom.u1 - dom.u0) / (nu - 1);

    // zeros[j] = u-locations of singular points on the line v = v_j
    std::vector<std::vector<double>> zeros(nv);
    std::vector<double> vs(nv);
    for (int jv = 0; jv < nv; ++jv) {
        const double v = dom.v0 + (dom.v1 - dom.v0) * jv / (nv - 1);
        vs[jv] = v;
        std::vector<double> d(nu);
        for (int i = 0; i < nu; ++i) d[i] = t_defect(surf, dom.u0 + du_grid * i, v);

        std::vector<double> found;
        auto add_zero = [&](double u) {
            if (std::abs(u_defect(surf, u, v)) > tau) return;  // X_u must be horizontal too
            for (double z : found)
                if (std::abs(z - u) <= 0.5 * du_grid) return;
            found.push_back(u);
        };

        for (int i = 0; i < nu; ++i) {
            const double ui = dom.u0 + du_grid * i;
            if (std::abs(d[i]) <= tau) {
                add_zero(ui);
                continue;
            }
            // sign change within the next cell
            if (i + 1 < nu && std::abs(d[i + 1]) > tau && (d[i] < 0) != (d[i + 1] < 0))
                add_zero(bisect_defect(surf, v, ui, ui + du_grid));
            // interior touching zero: local minimum of |d|
            if (i > 0 && i + 1 < nu && std::abs(d[i]) < std::abs(d[i - 1]) &&
                std::abs(d[i]) < std::abs(d[i + 1])) {
                const double u_star = minimize_abs_defect(surf, v, ui - du_grid, ui + du_grid);
                if (std::abs(t_defect(surf, u_star, v)) <= tau) add_zero(u_star);
            }
        }
        std::sort(found.begin(), found.end());
        zeros[jv] = std::move(found);
    }

    // Chain zeros of adjacent v-lines into polylines.
    std::vector<LocusPolyline> out;
    std::vector<std::vector<int>> chain_of(nv);  // polyline index carried per zero
    for (int jv = 0; jv < nv; ++jv) {
        chain_of[jv].assign(zeros[jv].size(), -1);
        for (size_t k = 0; k < zeros[jv].size(); ++k) {
            const double u = zeros[jv][k];
            int target = -1;
            if (jv > 0) {
                double best = 2.0 * du_grid + 1e-15;
                for (size_t kp = 0; kp < zeros[jv - 1].size(); ++kp) {
                    const double dist = std::abs(zeros[jv - 1][kp] - u);
                    if (dist < best) {
                        best = dist;
                        target = chain_of[jv - 1][kp];
                    }
                }
            }
            if (target < 0) {
                target = static_cast<int>(out.size());
                out.emplace_back();
            }
            chain_of[jv][k] = target;
            out[target].points.push_back({u, vs[jv], surf.at(u, vs[jv])});
        }
    }

    for (auto& pl : out) {
        double len = 0.0;
        for (size_t i = 1; i < pl.points.size(); ++i) {
            const HPoint& a = pl.points[i - 1].p;
            const HPoint& b = pl.points[i].p;
            len += std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                             (a.z - b.z) * (a.z - b.z));
        }
        pl.length3d = len;
        pl.is_point = pl.points.size() == 1 || len <= 1e-9;
    }
    return out;
}

}  // namespace heis
