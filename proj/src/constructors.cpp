#include "heis/constructors.hpp"

#include <cmath>

#include "heis/errors.hpp"
#include "heis/surface_geom.hpp"

namespace heis {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

void check_immersed(const ParamSurface& surf, const char* what) {
    constexpr int kN = 33;
    const Rectangle& d = surf.domain;
    for (int i = 0; i < kN; ++i) {
        for (int j = 0; j < kN; ++j) {
            const double u = d.u0 + (d.u1 - d.u0) * i / (kN - 1);
            const double v = d.v0 + (d.v1 - d.v0) * j / (kN - 1);
            if (!immersion_check(surf, u, v)) throw NotImmersed(what);
        }
    }
}

}  // namespace

HPoint PansuProfile::at(double s) const {
    const double l = lambda;
    const double w = 2.0 * l * s;
    return {std::sin(w) / (2.0 * l), (1.0 - std::cos(w)) / (2.0 * l),
            std::sin(w) / (4.0 * l * l) - s / (2.0 * l) + kPi / (4.0 * l * l)};
}

CartVector PansuProfile::d1(double s) const {
    const double w = 2.0 * lambda * s;
    return {std::cos(w), std::sin(w), (std::cos(w) - 1.0) / (2.0 * lambda)};
}

ParamSurface pansu(double lambda) {
    if (!(lambda > 0)) throw Error("InvalidParam", "pansu requires lambda > 0");
    const PansuProfile prof{lambda};
    ParamSurface surf;
    surf.jet = [prof](double s, double theta) -> SurfaceJet {
        const HPoint g = prof.at(s);
        const CartVector gd = prof.d1(s);
        const double ct = std::cos(theta), st = std::sin(theta);
        SurfaceJet out;
        out.p = {g.x * ct - g.y * st, g.x * st + g.y * ct, g.z};
        out.du = {gd.dx * ct - gd.dy * st, gd.dx * st + gd.dy * ct, gd.dz};
        out.dv = {-g.x * st - g.y * ct, g.x * ct - g.y * st, 0.0};
        return out;
    };
    surf.domain = {0.0, kPi / lambda, 0.0, 2.0 * kPi};
    surf.claimed_h = 2.0 * lambda;
    surf.tag = "pansu";
    return surf;
}

double GeneratingCurve::x(double st) const {
    if (c == 0.0) return std::sqrt(st * st + m * m);
    return std::sqrt(k / (c * c) + r * std::cos(c * st + phase));
}

double GeneratingCurve::t(double st) const {
    if (c == 0.0) return m * st;
    return -st / c - 0.5 * r * std::sin(c * st + phase);
}

double GeneratingCurve::x_d1(double st) const {
    if (c == 0.0) return st / x(st);
    return -0.5 * c * r * std::sin(c * st + phase) / x(st);
}

double GeneratingCurve::t_d1(double st) const {
    if (c == 0.0) return m;
    return -1.0 / c - 0.5 * c * r * std::cos(c * st + phase);
}

double GeneratingCurve::x_d2(double st) const {
    const double xv = x(st);
    if (c == 0.0) return (xv - st * x_d1(st)) / (xv * xv);
    return (-0.5 * c * c * r * std::cos(c * st + phase) - x_d1(st) * x_d1(st)) / xv;
}

double GeneratingCurve::t_d2(double st) const {
    if (c == 0.0) return 0.0;
    return 0.5 * c * c * r * std::sin(c * st + phase);
}

namespace {

/// Surface of revolution of a planar profile (a(s), b(s), t(s)).
ParamSurface revolve(std::function<void(double, double*, double*)> profile_jet,
                     const Rectangle& domain, double claimed_h, std::string tag) {
    ParamSurface surf;
    surf.jet = [profile_jet](double s, double theta) -> SurfaceJet {
        double g[3], gd[3];
        profile_jet(s, g, gd);
        const double ct = std::cos(theta), st = std::sin(theta);
        SurfaceJet out;
        out.p = {g[0] * ct - g[1] * st, g[0] * st + g[1] * ct, g[2]};
        out.du = {gd[0] * ct - gd[1] * st, gd[0] * st + gd[1] * ct, gd[2]};
        out.dv = {-g[0] * st - g[1] * ct, g[0] * ct - g[1] * st, 0.0};
        return out;
    };
    surf.domain = domain;
    surf.claimed_h = claimed_h;
    surf.tag = std::move(tag);
    return surf;
}

}  // namespace

RotationalSurface rotational_cmc(double c, double k, double phase) {
    if (c == 0.0) throw Error("InvalidParam", "rotational_cmc requires c != 0; use rotational_minimal");
    if (k < 1.0) throw BadK("k >= 1 is required");

    GeneratingCurve gc;
    gc.c = c;
    gc.k = k;
    gc.r = 2.0 * std::sqrt(k - 1.0) / (c * c);
    gc.energy = (k - 2.0) / (2.0 * c);
    gc.phase = phase;

    const double root = std::sqrt(k - 1.0);
    const double x0 = root * std::sin(phase) / c;
    const double oneplus = root * std::cos(phase);  // 1 + c*y0

    // Horizontal geodesic of curvature c (parameter shifted by pi/c so the
    // generating curve reads x^2 = k/c^2 + r cos(c s~ + phase), t(0) = 0).
    auto profile = [c, x0, oneplus](double st, double* g, double* gd) {
        const double w = c * st;
        g[0] = x0 - std::sin(w) / c;
        g[1] = oneplus / c + std::cos(w) / c;
        g[2] = -(oneplus / (c * c)) * std::sin(w) - (x0 / c) * std::cos(w) - st / c;
        gd[0] = -std::cos(w);
        gd[1] = -std::sin(w);
        gd[2] = -(oneplus / c) * std::cos(w) + x0 * std::sin(w) - 1.0 / c;
    };

    const Rectangle domain{0.0, 2.0 * kPi / std::abs(c), 0.0, 2.0 * kPi};
    RotationalSurface out{revolve(profile, domain, c, "rotational-cmc"), gc};
    return out;
}

RotationalSurface rotational_minimal(double m) {
    GeneratingCurve gc;
    gc.c = 0.0;
    gc.m = m;
    gc.energy = m;
    gc.c2_minimal = m * m;

    if (m == 0.0) {
        // Horizontal plane t = 0 in polar parametrization.
        auto profile = [](double st, double* g, double* gd) {
            g[0] = st;
            g[1] = 0.0;
            g[2] = 0.0;
            gd[0] = 1.0;
            gd[1] = 0.0;
            gd[2] = 0.0;
        };
        return {revolve(profile, {0.25, 3.0, 0.0, 2.0 * kPi}, 0.0, "rotational-minimal"), gc};
    }

    const double am = std::abs(m);
    const double sg = m > 0 ? 1.0 : -1.0;
    // Horizontal line through (|m|, 0, 0): L(s~) = (|m|, -sg*s~, m*s~).
    auto profile = [am, sg, m](double st, double* g, double* gd) {
        g[0] = am;
        g[1] = -sg * st;
        g[2] = m * st;
        gd[0] = 0.0;
        gd[1] = -sg;
        gd[2] = m;
    };
    const Rectangle domain{-4.0, 4.0, 0.0, 2.0 * kPi};
    return {revolve(profile, domain, 0.0, "rotational-minimal"), gc};
}

DeformedSurface deform_pansu(const CurveSpec& c, double lambda, std::optional<Rectangle> domain) {
    if (!(lambda > 0)) throw Error("InvalidParam", "deform_pansu requires lambda > 0");
    const PansuProfile prof{lambda};

    ParamSurface surf;
    surf.jet = [prof, c](double s, double theta) -> SurfaceJet {
        const double ct = std::cos(theta), st = std::sin(theta);
        const HPoint g = prof.at(s);
        const CartVector gd = prof.d1(s);
        const double X1 = g.x * ct - g.y * st;
        const double X2 = g.x * st + g.y * ct;
        const double X1s = gd.dx * ct - gd.dy * st;
        const double X2s = gd.dx * st + gd.dy * ct;
        const double X1t = -g.x * st - g.y * ct;
        const double X2t = g.x * ct - g.y * st;

        const HPoint cc = c.at(theta);
        const CartVector cd = c.d1(theta);

        SurfaceJet out;
        out.p = {cc.x + X1, cc.y + X2, cc.z + g.z + cc.y * X1 - cc.x * X2};
        out.du = {X1s, X2s, gd.dz + cc.y * X1s - cc.x * X2s};
        out.dv = {cd.dx + X1t, cd.dy + X2t,
                  cd.dz + cd.dy * X1 + cc.y * X1t - cd.dx * X2 - cc.x * X2t};
        return out;
    };
    const double eps = 1e-3;
    surf.domain = domain.value_or(Rectangle{eps, kPi / lambda - eps, 0.0, 2.0 * kPi});
    surf.claimed_h = 2.0 * lambda;
    surf.tag = "deform-pansu";
    check_immersed(surf, "deform_pansu wedge vanished on the sampled domain");
    return {surf, c, lambda};
}

DeformedSurface deform_plane(const CurveSpec& c, std::optional<Rectangle> domain) {
    ParamSurface surf;
    surf.jet = [c](double r, double theta) -> SurfaceJet {
        const double ct = std::cos(theta), st = std::sin(theta);
        const HPoint cc = c.at(theta);
        const CartVector cd = c.d1(theta);
        SurfaceJet out;
        out.p = {cc.x + r * ct, cc.y + r * st, cc.z + r * cc.y * ct - r * cc.x * st};
        out.du = {ct, st, cc.y * ct - cc.x * st};
        out.dv = {cd.dx - r * st, cd.dy + r * ct,
                  cd.dz + r * (cd.dy * ct - cc.y * st - cd.dx * st - cc.x * ct)};
        return out;
    };
    surf.domain = domain.value_or(Rectangle{0.25, 2.25, 0.0, 2.0 * kPi});
    surf.claimed_h = 0.0;
    surf.tag = "deform-plane";
    check_immersed(surf, "deform_plane wedge vanished on the sampled domain");
    return {surf, c, 0.0};
}

CatalogEntry catalog(const std::string& name, const CatalogParams& p) {
    const double l = p.lambda;
    if (!(l > 0)) throw Error("InvalidParam", "catalog curves require lambda > 0");
    CurveSpec c;
    const double eps = 1e-3;
    const Rectangle cmc_domain{eps, kPi / l - eps, 0.0, 2.0 * kPi};

    if (name == "pansu_trivial") {
        c = constant_curve({0, 0, 0});
        return {c, CatalogKind::Cmc, cmc_domain};
    }
    if (name == "prop_c2value") {
        // ((r/l) sin, -(r/l) cos, r(1-r)/l^2 * theta)
        c.coords[0].terms = {CurveTerm::sin(p.r / l)};
        c.coords[1].terms = {CurveTerm::cos(-p.r / l)};
        c.coords[2].terms = {CurveTerm::poly(0, p.r * (1.0 - p.r) / (l * l))};
        return {c, CatalogKind::Cmc, cmc_domain};
    }
    if (name == "prop_c1linear") {
        c.coords[0].terms = {CurveTerm::sin(1.0 / l)};
        c.coords[1].terms = {CurveTerm::cos(-1.0 / l)};
        c.coords[2].terms = {CurveTerm::poly(0, 0.5 * (p.k - 1.0) / (l * l))};
        return {c, CatalogKind::Cmc, cmc_domain};
    }
    if (name == "prop_indepc1") {
        if (!(p.k > 0)) throw Error("InvalidParam", "prop_indepc1 requires k > 0");
        const double k = p.k, m = p.m;
        if (m == 1.0) {
            c.coords[0].terms = {CurveTerm::sin(0.5 / l), CurveTerm::poly(0, -0.5 / (l * k))};
            c.coords[1].terms = {CurveTerm::cos(-0.5 / l)};
            c.coords[2].terms = {CurveTerm::poly(0, 0.25 / (l * l)),
                                 CurveTerm::tcos(-0.25 / (l * l * k))};
        } else {
            const double q = 0.5 / (l * k * (m - 1.0));
            c.coords[0].terms = {CurveTerm::sin(0.5 / l), CurveTerm::sin(-q, m - 1.0)};
            c.coords[1].terms = {CurveTerm::cos(-0.5 / l), CurveTerm::cos(-q, m - 1.0)};
            c.coords[2].terms = {
                CurveTerm::poly(0, (1.0 + k * k * (m - 1.0)) / (4.0 * l * l * k * k * (m - 1.0))),
                CurveTerm::sin(-0.25 / (l * l * k * (m - 1.0)), m)};
        }
        return {c, CatalogKind::Cmc, cmc_domain};
    }
    if (name == "lnsectan") {
        // ((1/2l) sin - (1/4l) lnsectan, -(1/2l) cos, -theta/(4l^2) - lnsectan*cos/(8l^2))
        c.coords[0].terms = {CurveTerm::sin(0.5 / l), CurveTerm::lnsectan(-0.25 / l)};
        c.coords[1].terms = {CurveTerm::cos(-0.5 / l)};
        c.coords[2].terms = {CurveTerm::poly(0, -0.25 / (l * l)),
                             CurveTerm::lnsectan_cos(-0.125 / (l * l))};
        if (p.c3 != 0.0 || p.c4 != 0.0 || p.c6 != 0.0)
            c = left_translate(c, {p.c3, p.c4, p.c6});
        // theta stays clear of the sec poles at +-pi/2
        return {c, CatalogKind::Cmc, Rectangle{eps, kPi / l - eps, -1.25, 1.25}};
    }
    if (name == "pmin_rotlike") {
        c.coords[0].terms = {CurveTerm::sin(p.r)};
        c.coords[1].terms = {CurveTerm::cos(-p.r)};
        c.coords[2].terms = {CurveTerm::poly(0, p.z1)};
        return {c, CatalogKind::PMinimal, Rectangle{0.25, 2.25, 0.0, 2.0 * kPi}};
    }
    if (name == "degenerate_special1") {
        // (-theta, 0, (2 theta - sin 2 theta)/4)
        c.coords[0].terms = {CurveTerm::poly(0, -1.0)};
        c.coords[1].terms = {};
        c.coords[2].terms = {CurveTerm::poly(0, 0.5), CurveTerm::sin(-0.25, 2.0)};
        return {c, CatalogKind::PMinimal, Rectangle{1.25, 3.25, 0.0, 2.0 * kPi}};
    }
    throw UnknownName("no catalog curve named '" + name + "'");
}

}  // namespace heis
