#include "heis/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

#include <json.hpp>

#include "heis/codazzi.hpp"
#include "heis/constructors.hpp"
#include "heis/errors.hpp"
#include "heis/invariants.hpp"
#include "heis/surface_geom.hpp"

namespace heis::verify {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

std::string fmt(double x) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::scientific << x;
    return ss.str();
}

CriterionResult make_result(int id, std::string name, double max_err, double base_tol,
                            std::string details = "") {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.max_err = max_err;
    r.tol = base_tol * tol_scale();
    r.pass = max_err <= r.tol;
    r.details = std::move(details);
    return r;
}

/// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double mx = 0, my = 0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

double spread_about_mean(const std::vector<double>& y) {
    double m = 0;
    for (double v : y) m += v;
    m /= y.size();
    double s = 0;
    for (double v : y) s = std::max(s, std::abs(v - m));
    return s;
}

/// Max |H - expected| over an interior grid, skipping points where the
/// characteristic sweep hits a singular point or leaves the domain.
double h_sweep(const ParamSurface& surf, double expected, int nu, int nv, double h_step,
               int* sampled = nullptr) {
    const Rectangle& d = surf.domain;
    const double margin = 4.0 * h_step;
    double worst = 0.0;
    int ok = 0;
    for (int i = 0; i < nu; ++i) {
        const double u = d.u0 + margin + (d.u1 - d.u0 - 2 * margin) * (i + 0.5) / nu;
        for (int j = 0; j < nv; ++j) {
            const double v = d.v0 + (d.v1 - d.v0) * (j + 0.5) / nv;
            try {
                worst = std::max(worst, std::abs(p_mean_curvature(surf, u, v, h_step) - expected));
                ++ok;
            } catch (const Error&) {
                continue;  // singular point / pole row on the path
            }
        }
    }
    if (sampled) *sampled = ok;
    return worst;
}

}  // namespace

double tol_scale() {
    if (const char* env = std::getenv("HEISCMC_TOL_SCALE")) {
        const double s = std::atof(env);
        if (s > 0) return s;
    }
    return 1.0;
}

CriterionResult codazzi_residual_sweep() {
    std::mt19937_64 rng(0x5eed1234u);
    std::uniform_real_distribution<double> uc(0.5, 3.0), uc1(0.0, 2.0 * kPi), uc2(0.0, 5.0);
    double worst = 0.0;
    long samples = 0;
    for (int model = 0; model < 200; ++model) {
        const double c = uc(rng), c1 = uc1(rng), c2 = uc2(rng);
        const AlphaModel m = AlphaModel::general(c, c1, c2);
        std::uniform_real_distribution<double> ux(0.0, 2.0 * kPi / c);
        int kept = 0;
        long guard = 0;
        while (kept < 1000 && guard++ < 100000) {
            const double x = ux(rng);
            // off poles: keep the denominator bounded away from zero so the
            // analytic cancellation is measured, not roundoff blowup
            const double den = c2 - std::cos(c * x + c1);
            if (std::abs(den) < 0.05 * (1.0 + c2)) continue;
            worst = std::max(worst, std::abs(codazzi_residual(m, x)));
            ++kept;
            ++samples;
        }
    }
    return make_result(1, "codazzi-residual", worst, 1e-9,
                       "200 random models x 1000 x-samples (" + std::to_string(samples) + ")");
}

CriterionResult pansu_curvature() {
    double worst = 0.0;
    for (double lambda : {0.5, 1.0, 2.0}) {
        const ParamSurface s = pansu(lambda);
        worst = std::max(worst, h_sweep(s, 2.0 * lambda, 50, 50, 1e-3));
    }
    return make_result(2, "pansu-curvature", worst, 1e-5, "lambda in {0.5, 1, 2}, 50x50 interior");
}

CriterionResult pansu_frame_closed_forms() {
    double worst = 0.0;
    for (double lambda : {0.5, 1.0, 2.0}) {
        const ParamSurface surf = pansu(lambda);
        const Rectangle& d = surf.domain;
        const double margin = 4e-3;
        for (int i = 0; i < 50; ++i) {
            const double s = d.u0 + margin + (d.u1 - d.u0 - 2 * margin) * (i + 0.5) / 50;
            const double w = 2.0 * lambda * s;
            const double alpha_cf = lambda * std::sin(w) / (1.0 - std::cos(w));
            const double norm = std::sqrt(1.0 + alpha_cf * alpha_cf);
            const double a_cf = -lambda / norm;
            const double b_cf = 2.0 * lambda * lambda / (norm * (1.0 - std::cos(w)));
            for (int j = 0; j < 50; ++j) {
                const double theta = d.v0 + (d.v1 - d.v0) * (j + 0.5) / 50;
                const CharFrame f = extract_alpha_ab(surf, s, theta);
                worst = std::max({worst, std::abs(f.alpha - alpha_cf), std::abs(f.a - a_cf),
                                  std::abs(f.b - b_cf)});
            }
        }
    }
    return make_result(3, "pansu-alpha-a-b", worst, 1e-9, "extraction vs closed forms");
}

namespace {

struct DeformCase {
    std::string name;
    CatalogParams params;
};

std::vector<DeformCase> criterion_cases() {
    std::vector<DeformCase> cases;
    for (double r : {0.1, 0.25, 0.75}) {
        CatalogParams p;
        p.r = r;
        cases.push_back({"prop_c2value", p});
    }
    for (double k : {0.5, 3.0}) {
        CatalogParams p;
        p.k = k;
        cases.push_back({"prop_c1linear", p});
    }
    for (double m : {-1.0, 0.5, 2.0}) {
        CatalogParams p;
        p.k = 2.0;
        p.m = m;
        cases.push_back({"prop_indepc1", p});
    }
    cases.push_back({"lnsectan", CatalogParams{}});
    return cases;
}

}  // namespace

CriterionResult deformation_curvature() {
    double worst_h = 0.0, worst_alpha = 0.0;
    for (const DeformCase& dc : criterion_cases()) {
        const CatalogEntry entry = catalog(dc.name, dc.params);
        const double lambda = dc.params.lambda;
        const DeformedSurface ds = deform_pansu(entry.curve, lambda, entry.default_domain);
        worst_h = std::max(worst_h, h_sweep(ds.surface, 2.0 * lambda, 24, 24, 1e-3));

        // extracted alpha against the closed form
        const Rectangle& d = ds.surface.domain;
        for (int i = 0; i < 24; ++i) {
            const double s = d.u0 + (d.u1 - d.u0) * (i + 0.5) / 24;
            for (int j = 0; j < 24; ++j) {
                const double theta = d.v0 + (d.v1 - d.v0) * (j + 0.5) / 24;
                const DeformationData dd = deformation_data(entry.curve, lambda, theta);
                const double w = 2.0 * lambda * s + dd.zeta;
                const double den = dd.G - std::cos(w);
                if (std::abs(den) < 0.05 * (1.0 + std::abs(dd.G))) continue;
                const double alpha_cf = lambda * std::sin(w) / den;
                try {
                    const CharFrame f = extract_alpha_ab(ds.surface, s, theta);
                    worst_alpha = std::max(worst_alpha, std::abs(f.alpha - alpha_cf));
                } catch (const Error&) {
                    continue;
                }
            }
        }
    }
    const double worst = std::max(worst_h / 1e-5, worst_alpha / 1e-9);
    return make_result(4, "deformation-cmc", worst, 1.0,
                       "max|H-2l|=" + fmt(worst_h) + " (tol 1e-5), max|alpha-closed|=" +
                           fmt(worst_alpha) + " (tol 1e-9), scaled to 1");
}

CriterionResult invariant_pipeline() {
    double worst = 0.0;  // scaled to tol 1e-6
    std::string details;

    auto note = [&details](const std::string& s) {
        if (!details.empty()) details += "; ";
        details += s;
    };

    for (double r : {0.1, 0.25, 0.75}) {
        CatalogParams p;
        p.r = r;
        const CatalogEntry e = catalog("prop_c2value", p);
        const auto ni = normalize_deformed(e.curve, p.lambda, {0.0, 2.0 * kPi}, 129);
        const double want = 1.0 / std::abs(1.0 - 2.0 * r);
        double err = spread_about_mean(ni.profile.zeta1);
        for (double z2 : ni.profile.zeta2) err = std::max(err, std::abs(z2 - want));
        worst = std::max(worst, err);
        note("c2value(r=" + std::to_string(r).substr(0, 4) + ") err=" + fmt(err));
    }
    for (double k : {0.5, 3.0}) {
        CatalogParams p;
        p.k = k;
        const CatalogEntry e = catalog("prop_c1linear", p);
        const auto ni = normalize_deformed(e.curve, p.lambda, {0.0, 2.0 * kPi}, 129);
        double err = std::abs(ls_slope(ni.profile.theta_tilde, ni.profile.zeta1) - (k - 1.0));
        for (double z2 : ni.profile.zeta2) err = std::max(err, std::abs(z2 - k));
        worst = std::max(worst, err);
        note("c1linear(k=" + std::to_string(k).substr(0, 4) + ") err=" + fmt(err));
    }
    for (double m : {-1.0, 0.5, 2.0}) {
        CatalogParams p;
        p.k = 2.0;
        p.m = m;
        const CatalogEntry e = catalog("prop_indepc1", p);
        const auto ni = normalize_deformed(e.curve, p.lambda, {0.0, 2.0 * kPi}, 129);
        // the linear-zeta1 statement is in the deformation parameter theta
        double err = std::abs(ls_slope(ni.profile.theta_src, ni.profile.zeta1) - m);
        for (double z2 : ni.profile.zeta2) err = std::max(err, std::abs(z2 - 2.0));
        worst = std::max(worst, err);
        note("indepc1(m=" + std::to_string(m).substr(0, 4) + ") err=" + fmt(err));
    }
    {
        const CatalogEntry e = catalog("lnsectan", CatalogParams{});
        const auto ni = normalize_deformed(e.curve, 1.0, {-1.25, 1.25}, 129);
        double err = spread_about_mean(ni.profile.zeta1);
        for (double z2 : ni.profile.zeta2) err = std::max(err, std::abs(z2));
        worst = std::max(worst, err);
        note("lnsectan err=" + fmt(err));
    }
    return make_result(5, "invariant-pipeline", worst, 1e-6, details);
}

CriterionResult rotational_cmc_suite() {
    double worst_e = 0.0, worst_h = 0.0, worst_fit = 0.0;
    for (double c : {1.0, 2.0}) {
        for (double k : {1.5, 2.0, 5.0}) {
            const RotationalSurface rs = rotational_cmc(c, k);
            const double e_want = (k - 2.0) / (2.0 * c);

            // energy along the generating curve, horizontal-parameter jets
            std::vector<double> es;
            for (int i = 0; i <= 40; ++i) {
                const double st = rs.surface.domain.u0 +
                                  (rs.surface.domain.u1 - rs.surface.domain.u0) * i / 40.0;
                const double x = rs.curve.x(st);
                if (x * x < 1e-3) continue;
                es.push_back(energy(x, rs.curve.x_d1(st), rs.curve.t_d1(st), 0.5 * c));
            }
            for (double e : es) worst_e = std::max(worst_e, std::abs(e - e_want));
            worst_e = std::max(worst_e, spread_about_mean(es));

            worst_h = std::max(worst_h, h_sweep(rs.surface, c, 24, 24, 1e-3));

            const auto ni = rotational_cmc_invariants(c, k);
            const auto rep = cross_validate(rs.surface, ni.chart, ni.profile, 9, 33);
            const double r = rs.curve.r;
            const double zeta2_want = -(2.0 * c * e_want + 2.0) / (c * c * r);
            const double slope_want = -2.0 * e_want / (c * r);
            double err = 0.0;
            for (double z2 : rep.fit_zeta2) err = std::max(err, std::abs(z2 - zeta2_want));
            if (rep.slices >= 3)
                err = std::max(err, std::abs(ls_slope(rep.ttilde, rep.fit_zeta1) - slope_want));
            else
                err = 1.0;
            worst_fit = std::max(worst_fit, err);
        }
    }
    const double worst = std::max({worst_e / 1e-10, worst_h / 1e-5, worst_fit / 1e-6});
    return make_result(6, "rotational-cmc", worst, 1.0,
                       "E err=" + fmt(worst_e) + " (tol 1e-10), H err=" + fmt(worst_h) +
                           " (tol 1e-5), fit err=" + fmt(worst_fit) + " (tol 1e-6), scaled to 1");
}

CriterionResult rotational_minimal_suite() {
    double worst_h = 0.0, worst_e = 0.0, worst_slope = 0.0;
    for (double m : {0.5, 2.0}) {
        const RotationalSurface rs = rotational_minimal(m);
        worst_h = std::max(worst_h, h_sweep(rs.surface, 0.0, 24, 24, 1e-3));
        for (int i = 0; i <= 20; ++i) {
            const double st = -3.0 + 6.0 * i / 20.0;
            worst_e = std::max(
                worst_e,
                std::abs(energy(rs.curve.x(st), rs.curve.x_d1(st), rs.curve.t_d1(st), 0.0) - m));
        }
        const auto ni = rotational_minimal_invariants(m);
        const auto rep = cross_validate(rs.surface, ni.chart, ni.profile, 9, 33);
        if (rep.slices >= 3)
            worst_slope =
                std::max(worst_slope, std::abs(ls_slope(rep.ttilde, rep.fit_zeta1) - m));
        else
            worst_slope = 1.0;
    }
    const double oracle = rotational_minimal_oracle(1.0, 2.0);
    const bool oracle_ok = oracle >= 1e-2;
    const double worst =
        std::max({worst_h / 1e-6, worst_e / 1e-10, worst_slope / 1e-6, oracle_ok ? 0.0 : 2.0});
    return make_result(7, "rotational-minimal", worst, 1.0,
                       "H err=" + fmt(worst_h) + " (tol 1e-6), E err=" + fmt(worst_e) +
                           " (tol 1e-10), slope err=" + fmt(worst_slope) +
                           " (tol 1e-6), oracle |H| residual at c2=1,m=2: " + fmt(oracle) +
                           " (must be >= 1e-2), scaled to 1");
}

CriterionResult singular_sets() {
    std::string details;
    bool ok = true;

    {  // Pansu: exactly the two poles
        const ParamSurface s = pansu(1.0);
        const auto locus = singular_locus(s, 64, 64);
        bool good = locus.size() == 2;
        for (const auto& pl : locus) {
            good = good && pl.is_point;
            if (!pl.points.empty()) {
                const HPoint& p = pl.points.front().p;
                good = good && std::abs(p.x) < 1e-9 && std::abs(p.y) < 1e-9 &&
                       std::abs(std::abs(p.z) - kPi / 4.0) < 1e-9;
            }
        }
        ok = ok && good;
        details += "pansu poles: " + std::to_string(locus.size()) + (good ? " ok" : " FAIL");
    }
    {  // general type I: empty locus
        CatalogParams p;
        p.k = 3.0;
        const CatalogEntry e = catalog("prop_c1linear", p);
        const DeformedSurface ds = deform_pansu(e.curve, 1.0, e.default_domain);
        const auto locus = singular_locus(ds.surface, 64, 64);
        ok = ok && locus.empty();
        details += "; generalI locus size: " + std::to_string(locus.size());
    }
    {  // special type I with nonconstant zeta1: positive length
        CatalogParams p;
        p.k = 1.0;
        p.m = 0.5;
        const CatalogEntry e = catalog("prop_indepc1", p);
        const DeformedSurface ds = deform_pansu(e.curve, 1.0, e.default_domain);
        const auto locus = singular_locus(ds.surface, 64, 64);
        double maxlen = 0.0;
        for (const auto& pl : locus) maxlen = std::max(maxlen, pl.length3d);
        ok = ok && maxlen > 1e-3;
        details += "; specialI curve length: " + fmt(maxlen);
    }
    return make_result(8, "singular-sets", ok ? 0.0 : 1.0, 0.5, details);
}

CriterionResult pminimal_invariant_suite() {
    double worst_fit = 0.0, worst_residual = 0.0;

    struct Case {
        double r, z1;
    };
    for (const Case cc : {Case{1.0, -2.0}, Case{0.5, 1.0}}) {
        CatalogParams p;
        p.r = cc.r;
        p.z1 = cc.z1;
        const CatalogEntry e = catalog("pmin_rotlike", p);
        const DeformedSurface ds = deform_plane(e.curve, e.default_domain);
        const auto ni = pminimal_profile(e.curve, {0.0, 2.0 * kPi}, 129);
        const auto rep = cross_validate(ds.surface, ni.chart, ni.profile, 9, 33);
        worst_fit = std::max({worst_fit, rep.max_dzeta1, rep.max_dzeta2});
        if (rep.slices < 3) worst_fit = 1.0;
    }
    {  // degenerate special type I: the special-type-I residual vanishes
        const CatalogEntry e = catalog("degenerate_special1", CatalogParams{});
        for (int i = 0; i <= 256; ++i) {
            const double th = 2.0 * kPi * i / 256.0;
            const auto [z1, z2] = pminimal_invariants(e.curve, th);
            (void)z1;
            worst_residual = std::max(worst_residual, std::abs(z2));
        }
    }
    const double worst = std::max(worst_fit / 1e-6, worst_residual / 1e-10);
    return make_result(9, "pminimal-invariants", worst, 1.0,
                       "closed-vs-numeric err=" + fmt(worst_fit) +
                           " (tol 1e-6), special-I residual=" + fmt(worst_residual) +
                           " (tol 1e-10), scaled to 1");
}

CriterionResult canonical_crosscheck() {
    // rotational c=2, k=2 has the constant profile (zeta1, zeta2) = (0, -1)
    const auto ni = rotational_cmc_invariants(2.0, 2.0, 0.0);
    const double z1 = ni.profile.zeta1.front();
    const double z2 = ni.profile.zeta2.front();
    const auto [c1, c2] = canonicalize(z1, z2);

    double worst = std::abs(c2 - 1.0);
    const AlphaModel canon = AlphaModel::general(2.0, c1, c2);
    const AlphaModel pansu_normal = AlphaModel::general(2.0, 0.0, 1.0);
    // normal coordinates agree after the translation s -> s + pi/(2 lambda)
    const double shift = (c1 - 0.0) / 2.0;
    for (int i = 0; i <= 200; ++i) {
        const double s = -3.0 + 6.0 * i / 200.0;
        double a_rot, a_pansu;
        try {
            a_rot = alpha_eval(canon, s);
            a_pansu = alpha_eval(pansu_normal, s + shift);
        } catch (const AtPole&) {
            continue;
        }
        if (std::abs(a_rot) > 1e3) continue;  // pole neighborhood
        worst = std::max(worst, std::abs(a_rot - a_pansu));
    }
    const bool special_i =
        classify(canon, {0.1, 0.5}).label == SurfaceTypeLabel::SpecialI;
    if (!special_i) worst = std::max(worst, 1.0);
    return make_result(10, "canonicalize-pansu", worst, 1e-10,
                       "rotational (0,-1) -> canonical (pi,1), pointwise alpha check");
}

std::vector<CriterionResult> run_all() {
    return {codazzi_residual_sweep(), pansu_curvature(),        pansu_frame_closed_forms(),
            deformation_curvature(),  invariant_pipeline(),     rotational_cmc_suite(),
            rotational_minimal_suite(), singular_sets(),        pminimal_invariant_suite(),
            canonical_crosscheck()};
}

CriterionResult curvature_sweep(const ParamSurface& surf, double expected_h, double tol) {
    int sampled = 0;
    const double worst = h_sweep(surf, expected_h, 32, 32, 1e-3, &sampled);
    return make_result(0, "h-sweep", worst, tol,
                       "expected H=" + fmt(expected_h) + ", " + std::to_string(sampled) +
                           " samples");
}

double rotational_minimal_oracle(double c2, double m) {
    // surface of revolution of x = sqrt(u^2 + c2), t = m u
    ParamSurface surf;
    surf.jet = [c2, m](double u, double theta) -> SurfaceJet {
        const double x = std::sqrt(u * u + c2);
        const double xd = u / x;
        const double ct = std::cos(theta), st = std::sin(theta);
        SurfaceJet out;
        out.p = {x * ct, x * st, m * u};
        out.du = {xd * ct, xd * st, m};
        out.dv = {-x * st, x * ct, 0.0};
        return out;
    };
    surf.domain = {-2.0, 2.0, 0.0, 2.0 * kPi};
    surf.tag = "rotational-minimal-oracle";
    double worst = 0.0;
    for (int i = 0; i < 24; ++i) {
        const double u = -1.5 + 3.0 * (i + 0.5) / 24;
        for (int j = 0; j < 8; ++j) {
            const double v = 2.0 * kPi * (j + 0.5) / 8;
            try {
                worst = std::max(worst, std::abs(p_mean_curvature(surf, u, v, 1e-3)));
            } catch (const Error&) {
                continue;
            }
        }
    }
    return worst;
}

std::string report_json(const std::vector<CriterionResult>& results) {
    nlohmann::json j;
    j["tol_scale"] = tol_scale();
    j["criteria"] = nlohmann::json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        j["criteria"].push_back({{"id", r.id},
                                 {"name", r.name},
                                 {"max_err", r.max_err},
                                 {"tol", r.tol},
                                 {"pass", r.pass},
                                 {"details", r.details}});
    }
    j["all_pass"] = all;
    return j.dump(2) + "\n";
}

}  // namespace heis::verify
