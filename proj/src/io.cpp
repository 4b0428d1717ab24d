#include "heis/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "heis/errors.hpp"

namespace heis {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double dist3(const HPoint& a, const HPoint& b) {
    return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                     (a.z - b.z) * (a.z - b.z));
}

}  // namespace

std::string export_obj(const ParamSurface& surf, int nu, int nv) {
    if (nu < 2 || nv < 2) throw Error("InvalidGrid", "mesh needs at least a 2x2 grid");
    const Rectangle& d = surf.domain;

    std::vector<std::vector<HPoint>> pts(nu, std::vector<HPoint>(nv));
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j)
            pts[i][j] = surf.at(d.u0 + (d.u1 - d.u0) * i / (nu - 1),
                                d.v0 + (d.v1 - d.v0) * j / (nv - 1));

    // pole rows collapse to a single vertex
    std::vector<bool> collapsed(nu, false);
    for (int i = 0; i < nu; ++i) {
        double maxdist = 0.0;
        for (int j = 1; j < nv; ++j) maxdist = std::max(maxdist, dist3(pts[i][0], pts[i][j]));
        collapsed[i] = maxdist <= 1e-12;
    }

    std::string out = "# heiscmc surface mesh: " + surf.tag + "\n";
    std::vector<std::vector<int>> id(nu, std::vector<int>(nv, 0));
    int next = 1;
    for (int i = 0; i < nu; ++i) {
        const int jmax = collapsed[i] ? 1 : nv;
        for (int j = 0; j < jmax; ++j) {
            out += "v " + fmt17(pts[i][j].x) + " " + fmt17(pts[i][j].y) + " " +
                   fmt17(pts[i][j].z) + "\n";
            id[i][j] = next++;
        }
        if (collapsed[i])
            for (int j = 1; j < nv; ++j) id[i][j] = id[i][0];
    }

    auto face = [&out](int a, int b, int c) {
        out += "f " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + "\n";
    };
    for (int i = 0; i + 1 < nu; ++i) {
        for (int j = 0; j + 1 < nv; ++j) {
            const int a = id[i][j], b = id[i + 1][j], c = id[i + 1][j + 1], e = id[i][j + 1];
            if (a != b && b != c && c != a) face(a, b, c);
            if (a != c && c != e && e != a) face(a, c, e);
        }
    }
    return out;
}

std::string profile_csv(const InvariantProfile& p) {
    std::string out = "# gauge: " + p.gauge_note + "\n";
    out += "theta_tilde,zeta1,zeta2\n";
    for (size_t i = 0; i < p.theta_tilde.size(); ++i)
        out += fmt17(p.theta_tilde[i]) + "," + fmt17(p.zeta1[i]) + "," + fmt17(p.zeta2[i]) + "\n";
    return out;
}

std::string singular_csv(const std::vector<LocusPolyline>& polylines) {
    std::string out = "u,v,x,y,z\n";
    for (size_t k = 0; k < polylines.size(); ++k) {
        const auto& pl = polylines[k];
        out += "# polyline " + std::to_string(k) + (pl.is_point ? " (isolated point)" : "") +
               " length3d=" + fmt17(pl.length3d) + "\n";
        for (const auto& lp : pl.points)
            out += fmt17(lp.u) + "," + fmt17(lp.v) + "," + fmt17(lp.p.x) + "," + fmt17(lp.p.y) +
                   "," + fmt17(lp.p.z) + "\n";
    }
    return out;
}

std::string phase_field_csv(const std::vector<PhaseSample>& samples) {
    std::string out = "alpha,p,dalpha,dp\n";
    for (const auto& s : samples)
        out += fmt17(s.alpha) + "," + fmt17(s.p) + "," + fmt17(s.dalpha) + "," + fmt17(s.dp) + "\n";
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("IoError", "cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw Error("IoError", "short write to '" + path + "'");
}

}  // namespace heis
