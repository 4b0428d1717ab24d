#pragma once

#include <array>
#include <string>
#include <vector>

#include "heis/core.hpp"

namespace heis {

/// One analytic term of a curve coordinate. The closure of every curve in
/// the example catalog needs, besides polynomials and sinusoids, the products
/// theta*sin, theta*cos and cos(theta)*ln|sec+tan|.
struct CurveTerm {
    enum class Kind { Poly, Sin, Cos, TSin, TCos, LnSecTan, LnSecTanCos };

    Kind kind = Kind::Poly;
    std::array<double, 4> coeffs{};  // Poly only
    double amp = 0.0;
    double omega = 1.0;
    double phase = 0.0;

    static CurveTerm poly(double c0, double c1 = 0, double c2 = 0, double c3 = 0) {
        CurveTerm t;
        t.kind = Kind::Poly;
        t.coeffs = {c0, c1, c2, c3};
        return t;
    }
    static CurveTerm sin(double amp, double omega = 1, double phase = 0) {
        return {Kind::Sin, {}, amp, omega, phase};
    }
    static CurveTerm cos(double amp, double omega = 1, double phase = 0) {
        return {Kind::Cos, {}, amp, omega, phase};
    }
    static CurveTerm tsin(double amp, double omega = 1, double phase = 0) {
        return {Kind::TSin, {}, amp, omega, phase};
    }
    static CurveTerm tcos(double amp, double omega = 1, double phase = 0) {
        return {Kind::TCos, {}, amp, omega, phase};
    }
    static CurveTerm lnsectan(double amp) { return {Kind::LnSecTan, {}, amp, 1, 0}; }
    static CurveTerm lnsectan_cos(double amp) { return {Kind::LnSecTanCos, {}, amp, 1, 0}; }

    double value(double theta) const;
    double d1(double theta) const;
    double d2(double theta) const;
};

struct CoordExpr {
    std::vector<CurveTerm> terms;

    double value(double theta) const;
    double d1(double theta) const;
    double d2(double theta) const;
};

/// An analytic curve theta -> H1 with exact first and second derivatives.
struct CurveSpec {
    std::array<CoordExpr, 3> coords;

    HPoint at(double theta) const {
        return {coords[0].value(theta), coords[1].value(theta), coords[2].value(theta)};
    }
    CartVector d1(double theta) const {
        return {coords[0].d1(theta), coords[1].d1(theta), coords[2].d1(theta)};
    }
    CartVector d2(double theta) const {
        return {coords[0].d2(theta), coords[1].d2(theta), coords[2].d2(theta)};
    }

    /// Theta(C'(theta)) evaluated along the curve.
    double theta_of_velocity(double theta) const;
};

/// The constant curve theta -> p.
CurveSpec constant_curve(const HPoint& p);

/// g o C(theta), the left translate of the whole curve (stays inside the
/// term language).
CurveSpec left_translate(const CurveSpec& c, const HPoint& g);

/// JSON round trip. Schema:
///   {"coords":[{"terms":[{"kind":"poly","coeffs":[c0,c1,c2,c3]}
///                       |{"kind":"sin"|"cos"|"tsin"|"tcos","amp":A,"omega":w,"phase":p}
///                       |{"kind":"lnsectan"|"lnsectan_cos","amp":A}]} x3]}
CurveSpec curve_from_json(const std::string& text);
std::string curve_to_json(const CurveSpec& c);
CurveSpec load_curve(const std::string& path);

}  // namespace heis
