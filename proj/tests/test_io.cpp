#include <doctest.h>

#include <sstream>

#include "heis/constructors.hpp"
#include "heis/io.hpp"

using namespace heis;

namespace {

ParamSurface unit_plane() {
    ParamSurface s;
    s.jet = [](double u, double v) -> SurfaceJet {
        return {{u, v, 0.0}, {1, 0, 0}, {0, 1, 0}};
    };
    s.domain = {0, 1, 0, 1};
    s.tag = "plane";
    return s;
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
    int n = 0;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("obj export of a 2x2 plane") {
    const std::string obj = export_obj(unit_plane(), 2, 2);
    CHECK(count_lines_starting(obj, "v ") == 4);
    CHECK(count_lines_starting(obj, "f ") == 2);
}

TEST_CASE("obj export of the Pansu sphere deduplicates pole rows") {
    const std::string obj = export_obj(pansu(1.0), 64, 64);
    CHECK(count_lines_starting(obj, "v ") == 62 * 64 + 2);
    // two pole strips of triangles, the rest quads split in two
    CHECK(count_lines_starting(obj, "f ") == 61 * 63 * 2 + 2 * 63);
}

TEST_CASE("obj export is deterministic") {
    const std::string a = export_obj(pansu(0.5), 32, 32);
    const std::string b = export_obj(pansu(0.5), 32, 32);
    CHECK(a == b);
    // 17 significant digits: the north pole sits at z = pi/(4 lambda^2) = pi
    CHECK(a.find("3.1415926535897931") != std::string::npos);
}

TEST_CASE("profile csv carries the gauge note") {
    InvariantProfile p;
    p.gauge_note = "test gauge";
    p.theta_tilde = {0.0, 1.0};
    p.zeta1 = {0.5, 0.25};
    p.zeta2 = {2.0, 2.0};
    const std::string csv = profile_csv(p);
    CHECK(csv.find("# gauge: test gauge") == 0);
    CHECK(csv.find("theta_tilde,zeta1,zeta2") != std::string::npos);
    CHECK(count_lines_starting(csv, "0.5") == 0);  // zeta1 is the second column
    CHECK(csv.find("0,0.5,2") != std::string::npos);
}

TEST_CASE("phase field csv") {
    const auto samples = phase_field(1.5, {0, 1, 0, 1}, 2, 2);
    const std::string csv = phase_field_csv(samples);
    CHECK(csv.rfind("alpha,p,dalpha,dp\n", 0) == 0);
    CHECK(count_lines_starting(csv, "") == 5);
}
