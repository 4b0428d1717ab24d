// heiscmc: construct, classify and numerically verify constant p-mean
// curvature surfaces in the Heisenberg group H1.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "heis/codazzi.hpp"
#include "heis/constructors.hpp"
#include "heis/errors.hpp"
#include "heis/invariants.hpp"
#include "heis/io.hpp"
#include "heis/surface_geom.hpp"
#include "heis/verify.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

struct SourceOpts {
    std::string catalog_name;
    std::string curve_file;
    heis::CatalogParams params;
};

struct OutputOpts {
    std::string mesh_path;
    std::string profile_path;
    std::string singular_path;
    int nu = 64, nv = 64;
    int n_samples = 129;
};

void add_source_flags(CLI::App* cmd, SourceOpts& src) {
    cmd->add_option("--catalog", src.catalog_name,
                    "catalog curve: pansu_trivial, prop_c2value, prop_c1linear, prop_indepc1, "
                    "lnsectan, pmin_rotlike, degenerate_special1");
    cmd->add_option("--curve", src.curve_file, "curve spec JSON file");
    cmd->add_option("--lambda", src.params.lambda, "curvature parameter (H = 2*lambda)");
    cmd->add_option("--r", src.params.r, "catalog parameter r");
    cmd->add_option("--k", src.params.k, "catalog parameter k");
    cmd->add_option("--m", src.params.m, "catalog parameter m");
    cmd->add_option("--z1", src.params.z1, "pmin_rotlike z'(theta) slope");
    cmd->add_option("--c3", src.params.c3, "lnsectan translation x");
    cmd->add_option("--c4", src.params.c4, "lnsectan translation y");
    cmd->add_option("--c6", src.params.c6, "lnsectan translation z");
}

void add_output_flags(CLI::App* cmd, OutputOpts& out, bool with_profile = true) {
    cmd->add_option("--mesh", out.mesh_path, "write OBJ mesh");
    if (with_profile) cmd->add_option("--profile", out.profile_path, "write invariant profile CSV");
    cmd->add_option("--singular", out.singular_path, "write singular locus CSV");
    cmd->add_option("--nu", out.nu, "grid resolution along u")->check(CLI::Range(2, 4096));
    cmd->add_option("--nv", out.nv, "grid resolution along v")->check(CLI::Range(2, 4096));
    cmd->add_option("--samples", out.n_samples, "profile sample count")->check(CLI::Range(2, 100000));
}

heis::CatalogEntry resolve_curve(const SourceOpts& src, heis::CatalogKind expected) {
    if (!src.curve_file.empty()) {
        const heis::CurveSpec c = heis::load_curve(src.curve_file);
        const double eps = 1e-3;
        const heis::Rectangle dom =
            expected == heis::CatalogKind::Cmc
                ? heis::Rectangle{eps, kPi / src.params.lambda - eps, 0.0, 2.0 * kPi}
                : heis::Rectangle{0.25, 2.25, 0.0, 2.0 * kPi};
        return {c, expected, dom};
    }
    if (src.catalog_name.empty())
        throw heis::Error("UsageError", "either --catalog or --curve is required");
    return heis::catalog(src.catalog_name, src.params);
}

void emit_surface_outputs(const heis::ParamSurface& surf, const OutputOpts& out) {
    if (!out.mesh_path.empty()) heis::write_file(out.mesh_path, heis::export_obj(surf, out.nu, out.nv));
    if (!out.singular_path.empty())
        heis::write_file(out.singular_path,
                         heis::singular_csv(heis::singular_locus(surf, out.nu, out.nv)));
}

int run_verify(const std::string& what, const SourceOpts& src, double c2_oracle, double m_oracle,
               const std::string& report_path) {
    using namespace heis::verify;
    std::vector<CriterionResult> results;
    if (what == "all") {
        results = run_all();
    } else if (what == "codazzi") {
        results = {codazzi_residual_sweep()};
    } else if (what == "invariants") {
        results = {invariant_pipeline()};
    } else if (what == "h") {
        const heis::CatalogEntry entry = resolve_curve(src, heis::CatalogKind::Cmc);
        if (entry.kind == heis::CatalogKind::Cmc) {
            const heis::DeformedSurface ds =
                heis::deform_pansu(entry.curve, src.params.lambda, entry.default_domain);
            results = {curvature_sweep(ds.surface, 2.0 * src.params.lambda)};
        } else {
            const heis::DeformedSurface ds = heis::deform_plane(entry.curve, entry.default_domain);
            results = {curvature_sweep(ds.surface, 0.0, 1e-6)};
        }
    } else if (what == "rotational-minimal") {
        const double residual = rotational_minimal_oracle(c2_oracle, m_oracle);
        CriterionResult r;
        r.id = 0;
        r.name = "rotational-minimal-oracle";
        r.max_err = residual;
        r.tol = 0.0;
        r.pass = true;  // pure report: nonzero residual documents c2 != m^2
        r.details = "max |H| on x^2 = s^2 + c2, t = m*s with c2=" + std::to_string(c2_oracle) +
                    ", m=" + std::to_string(m_oracle) +
                    (c2_oracle == m_oracle * m_oracle ? " (p-minimal family)" : " (off family)");
        results = {r};
    } else {
        throw heis::Error("UsageError", "verify expects all|codazzi|h|invariants|rotational-minimal");
    }

    const std::string json = report_json(results);
    if (!report_path.empty())
        heis::write_file(report_path, json);
    else
        std::cout << json;
    for (const auto& r : results)
        if (!r.pass) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant p-mean curvature surfaces in the Heisenberg group H1"};
    app.require_subcommand(1);

    // pansu
    double pansu_lambda = 1.0;
    OutputOpts pansu_out;
    CLI::App* cmd_pansu = app.add_subcommand("pansu", "Pansu sphere of curvature 2*lambda");
    cmd_pansu->add_option("--lambda", pansu_lambda, "curvature parameter")->check(CLI::PositiveNumber);
    add_output_flags(cmd_pansu, pansu_out, false);

    // rotational
    double rot_c = 0.0, rot_k = 2.0, rot_phase = 0.0;
    std::optional<double> rot_m;
    OutputOpts rot_out;
    CLI::App* cmd_rot = app.add_subcommand("rotational", "rotationally invariant surface");
    cmd_rot->add_option("--c", rot_c, "p-mean curvature (nonzero)");
    cmd_rot->add_option("--k", rot_k, "shape parameter, k >= 1");
    cmd_rot->add_option("--phase", rot_phase, "generating-curve phase");
    cmd_rot->add_option("--m", [&rot_m](const std::vector<std::string>& v) {
        rot_m = std::stod(v.front());
        return true;
    }, "p-minimal family parameter");
    add_output_flags(cmd_rot, rot_out);

    // deform / pminimal / invariants
    SourceOpts def_src, pmin_src, inv_src;
    OutputOpts def_out, pmin_out, inv_out;
    CLI::App* cmd_deform = app.add_subcommand("deform", "deform the Pansu sphere along a curve");
    add_source_flags(cmd_deform, def_src);
    add_output_flags(cmd_deform, def_out);

    CLI::App* cmd_pmin = app.add_subcommand("pminimal", "deform the plane u=0 along a curve");
    add_source_flags(cmd_pmin, pmin_src);
    add_output_flags(cmd_pmin, pmin_out);

    CLI::App* cmd_inv = app.add_subcommand("invariants", "normalized invariant profile");
    add_source_flags(cmd_inv, inv_src);
    add_output_flags(cmd_inv, inv_out);
    bool inv_pminimal = false;
    cmd_inv->add_flag("--pminimal", inv_pminimal, "treat a --curve file as a plane deformation");

    // verify
    SourceOpts ver_src;
    std::string ver_what, ver_report;
    double ver_c2 = 1.0, ver_m = 2.0;
    CLI::App* cmd_verify = app.add_subcommand("verify", "verification suites (JSON report)");
    cmd_verify->add_option("what", ver_what, "all|codazzi|h|invariants|rotational-minimal")
        ->required();
    add_source_flags(cmd_verify, ver_src);
    cmd_verify->add_option("--c2", ver_c2, "rotational-minimal oracle c2");
    cmd_verify->add_option("--oracle-m", ver_m, "rotational-minimal oracle m");
    cmd_verify->add_option("--report", ver_report, "write JSON report here");

    // phase-field
    double pf_c = 1.5;
    int pf_na = 21, pf_np = 21;
    heis::Rectangle pf_rect{-2.0, 2.0, -3.0, 3.0};
    std::string pf_out;
    CLI::App* cmd_pf = app.add_subcommand("phase-field", "direction field of the Codazzi ODE");
    cmd_pf->add_option("--c", pf_c, "p-mean curvature");
    cmd_pf->add_option("--amin", pf_rect.u0);
    cmd_pf->add_option("--amax", pf_rect.u1);
    cmd_pf->add_option("--pmin", pf_rect.v0);
    cmd_pf->add_option("--pmax", pf_rect.v1);
    cmd_pf->add_option("--na", pf_na)->check(CLI::Range(2, 4096));
    cmd_pf->add_option("--np", pf_np)->check(CLI::Range(2, 4096));
    cmd_pf->add_option("--out", pf_out, "CSV output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_pansu->parsed()) {
            const heis::ParamSurface s = heis::pansu(pansu_lambda);
            emit_surface_outputs(s, pansu_out);
            std::cout << "pansu lambda=" << pansu_lambda << " H=" << 2.0 * pansu_lambda << "\n";
        } else if (cmd_rot->parsed()) {
            const heis::RotationalSurface rs =
                rot_m ? heis::rotational_minimal(*rot_m) : heis::rotational_cmc(rot_c, rot_k, rot_phase);
            emit_surface_outputs(rs.surface, rot_out);
            if (!rot_out.profile_path.empty()) {
                const auto ni = rot_m ? heis::rotational_minimal_invariants(*rot_m)
                                      : heis::rotational_cmc_invariants(rot_c, rot_k, rot_phase);
                heis::write_file(rot_out.profile_path, heis::profile_csv(ni.profile));
            }
            std::cout << "rotational surface: E=" << rs.curve.energy << " r=" << rs.curve.r << "\n";
        } else if (cmd_deform->parsed()) {
            const heis::CatalogEntry entry = resolve_curve(def_src, heis::CatalogKind::Cmc);
            if (entry.kind != heis::CatalogKind::Cmc)
                throw heis::Error("UsageError", "catalog curve is p-minimal; use `pminimal`");
            const heis::DeformedSurface ds =
                heis::deform_pansu(entry.curve, def_src.params.lambda, entry.default_domain);
            emit_surface_outputs(ds.surface, def_out);
            if (!def_out.profile_path.empty()) {
                const auto ni = heis::normalize_deformed(
                    ds.curve, ds.lambda, {entry.default_domain.v0, entry.default_domain.v1},
                    def_out.n_samples);
                heis::write_file(def_out.profile_path, heis::profile_csv(ni.profile));
            }
            std::cout << "deformed CMC surface: H=" << 2.0 * def_src.params.lambda << "\n";
        } else if (cmd_pmin->parsed()) {
            const heis::CatalogEntry entry = resolve_curve(pmin_src, heis::CatalogKind::PMinimal);
            const heis::DeformedSurface ds = heis::deform_plane(entry.curve, entry.default_domain);
            emit_surface_outputs(ds.surface, pmin_out);
            if (!pmin_out.profile_path.empty()) {
                const auto ni = heis::pminimal_profile(
                    ds.curve, {entry.default_domain.v0, entry.default_domain.v1},
                    pmin_out.n_samples);
                heis::write_file(pmin_out.profile_path, heis::profile_csv(ni.profile));
            }
            std::cout << "deformed p-minimal surface\n";
        } else if (cmd_inv->parsed()) {
            const heis::CatalogEntry entry = resolve_curve(
                inv_src, inv_pminimal ? heis::CatalogKind::PMinimal : heis::CatalogKind::Cmc);
            const std::pair<double, double> range{entry.default_domain.v0, entry.default_domain.v1};
            const heis::NormalizedInvariants ni =
                entry.kind == heis::CatalogKind::Cmc
                    ? heis::normalize_deformed(entry.curve, inv_src.params.lambda, range,
                                               inv_out.n_samples)
                    : heis::pminimal_profile(entry.curve, range, inv_out.n_samples);
            const std::string csv = heis::profile_csv(ni.profile);
            if (!inv_out.profile_path.empty())
                heis::write_file(inv_out.profile_path, csv);
            else
                std::cout << csv;
        } else if (cmd_verify->parsed()) {
            return run_verify(ver_what, ver_src, ver_c2, ver_m, ver_report);
        } else if (cmd_pf->parsed()) {
            const auto samples = heis::phase_field(pf_c, pf_rect, pf_na, pf_np);
            const std::string csv = heis::phase_field_csv(samples);
            if (!pf_out.empty())
                heis::write_file(pf_out, csv);
            else
                std::cout << csv;
        }
    } catch (const heis::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
