#include <doctest.h>

#include <cmath>
#include <random>

#include "heis/constructors.hpp"
#include "heis/curve_spec.hpp"

using namespace heis;

namespace {

double fd1(const CoordExpr& e, double t, double h = 1e-6) {
    return (e.value(t + h) - e.value(t - h)) / (2 * h);
}
double fd2(const CoordExpr& e, double t, double h = 1e-5) {
    return (e.value(t + h) - 2 * e.value(t) + e.value(t - h)) / (h * h);
}

}  // namespace

TEST_CASE("term derivatives match central differences") {
    CoordExpr e;
    e.terms = {CurveTerm::poly(0.5, -1.0, 0.25, 0.125), CurveTerm::sin(1.2, 2.0, 0.3),
               CurveTerm::cos(-0.7, 0.5, 1.1),          CurveTerm::tsin(0.4, 1.5, 0.2),
               CurveTerm::tcos(-0.3, 2.5, 0.0),         CurveTerm::lnsectan(0.6),
               CurveTerm::lnsectan_cos(-0.9)};
    for (double t : {-1.2, -0.4, 0.3, 0.9, 1.3}) {
        CHECK(e.d1(t) == doctest::Approx(fd1(e, t)).epsilon(1e-8));
        CHECK(e.d2(t) == doctest::Approx(fd2(e, t)).epsilon(1e-5));
    }
}

TEST_CASE("lnsectan term near its poles") {
    CoordExpr e;
    e.terms = {CurveTerm::lnsectan(1.0)};
    // derivative rule holds away from odd multiples of pi/2
    const double t = 1.5;  // close to pi/2 but still finite
    CHECK(e.d1(t) == doctest::Approx(fd1(e, t, 1e-7)).epsilon(1e-5));
}

TEST_CASE("json round trip") {
    const CatalogEntry entry = catalog("prop_indepc1", {});
    const std::string text = curve_to_json(entry.curve);
    const CurveSpec back = curve_from_json(text);
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int it = 0; it < 50; ++it) {
        const double t = u(rng);
        const HPoint a = entry.curve.at(t), b = back.at(t);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
        CHECK(a.z == b.z);
        const CartVector da = entry.curve.d1(t), db = back.d1(t);
        CHECK(da.dx == db.dx);
        CHECK(da.dz == db.dz);
    }
}

TEST_CASE("json parses the documented schema") {
    const std::string text = R"({"coords":[
        {"terms":[{"kind":"poly","coeffs":[0,1]},{"kind":"sin","amp":2.0,"omega":3.0,"phase":0.5}]},
        {"terms":[{"kind":"cos","amp":-1.0}]},
        {"terms":[{"kind":"lnsectan","amp":0.25}]}]})";
    const CurveSpec c = curve_from_json(text);
    CHECK(c.at(0.2).x ==
          doctest::Approx(0.2 + 2.0 * std::sin(3.0 * 0.2 + 0.5)).epsilon(1e-15));
    CHECK(c.at(0.2).y == doctest::Approx(-std::cos(0.2)).epsilon(1e-15));

    CHECK_THROWS(curve_from_json(R"({"coords":[]})"));
    CHECK_THROWS(curve_from_json(
        R"({"coords":[{"terms":[{"kind":"poly","coeffs":[1,1,1,1,1]}]},{"terms":[]},{"terms":[]}]})"));
    CHECK_THROWS(curve_from_json(
        R"({"coords":[{"terms":[{"kind":"exp","amp":1}]},{"terms":[]},{"terms":[]}]})"));
}

TEST_CASE("left translation composes with the group law") {
    const CatalogEntry entry = catalog("prop_c2value", {});
    const HPoint g{0.3, -0.8, 1.7};
    const CurveSpec moved = left_translate(entry.curve, g);
    for (double t : {-1.0, 0.0, 0.4, 2.2}) {
        const HPoint want = group_mul(g, entry.curve.at(t));
        const HPoint got = moved.at(t);
        CHECK(got.x == doctest::Approx(want.x).epsilon(1e-15));
        CHECK(got.y == doctest::Approx(want.y).epsilon(1e-15));
        CHECK(got.z == doctest::Approx(want.z).epsilon(1e-14));
    }
}

TEST_CASE("theta of velocity") {
    // C = (r sin, -r cos, z1*theta): Theta(C') = z1 + r^2
    CatalogParams p;
    p.r = 1.0;
    p.z1 = -2.0;
    const CatalogEntry e = catalog("pmin_rotlike", p);
    for (double t : {0.0, 1.0, 4.0})
        CHECK(e.curve.theta_of_velocity(t) == doctest::Approx(-1.0).epsilon(1e-14));
}
