#include "heis/codazzi.hpp"

#include <cmath>

namespace heis {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double wrap_2pi(double a) {
    double w = std::fmod(a, kTwoPi);
    if (w < 0) w += kTwoPi;
    return w;
}

}  // namespace

AlphaModel AlphaModel::general(double c, double c1, double c2) {
    if (c == 0.0) throw Error("InvalidModel", "General branch requires c != 0");
    AlphaModel m{c, AlphaBranch::General, c1, c2, 0.0, false};
    if (c2 < 0) {
        auto [c1c, c2c] = canonicalize(c1, c2);
        m.c1 = c1c;
        m.c2 = c2c;
        m.raw_c2_negative = true;
    }
    return m;
}

std::string to_string(SurfaceTypeLabel label) {
    switch (label) {
        case SurfaceTypeLabel::Vertical: return "vertical";
        case SurfaceTypeLabel::SpecialI: return "special-I";
        case SurfaceTypeLabel::SpecialII: return "special-II";
        case SurfaceTypeLabel::GeneralI: return "general-I";
        case SurfaceTypeLabel::GeneralII: return "general-II";
        case SurfaceTypeLabel::GeneralIII: return "general-III";
    }
    return "?";
}

double alpha_eval(const AlphaModel& m, double x) { return alpha_derivs(m, x).alpha; }

AlphaJet alpha_derivs(const AlphaModel& m, double x) {
    const double c = m.c;
    switch (m.branch) {
        case AlphaBranch::Zero:
            return {0.0, 0.0, 0.0};
        case AlphaBranch::TanFull: {
            const double w = c * x + c * m.shift;
            const double cw = std::cos(w);
            if (std::abs(cw) <= kPoleGuard) throw AtPole("tan branch, cos(cx+cK1) ~ 0");
            const double t = std::tan(w);
            const double sec2 = 1.0 + t * t;
            return {-0.5 * c * t, -0.5 * c * c * sec2, -c * c * c * sec2 * t};
        }
        case AlphaBranch::TanHalf: {
            const double w = 0.5 * c * (x - m.shift);
            const double cw = std::cos(w);
            if (std::abs(cw) <= kPoleGuard) throw AtPole("tan branch, cos(c(x-K2)/2) ~ 0");
            const double t = std::tan(w);
            const double sec2 = 1.0 + t * t;
            return {-0.5 * c * t, -0.25 * c * c * sec2, -0.25 * c * c * c * sec2 * t};
        }
        case AlphaBranch::General: {
            const double u = c * x + m.c1;
            const double s = std::sin(u);
            const double k = std::cos(u);
            const double den = m.c2 - k;
            if (std::abs(den) <= kPoleGuard) throw AtPole("general branch, c2 - cos(cx+c1) ~ 0");
            const double a = 0.5 * c * s / den;
            const double ax = 0.5 * c * c * (m.c2 * k - 1.0) / (den * den);
            const double axx = 0.5 * c * c * c * s * (2.0 - m.c2 * m.c2 - m.c2 * k) / (den * den * den);
            return {a, ax, axx};
        }
    }
    return {0.0, 0.0, 0.0};
}

double codazzi_residual(const AlphaModel& m, double x) {
    const AlphaJet j = alpha_derivs(m, x);
    return j.alpha_xx + 6.0 * j.alpha * j.alpha_x + 4.0 * j.alpha * j.alpha * j.alpha +
           m.c * m.c * j.alpha;
}

SurfaceType classify(const AlphaModel& m, std::pair<double, double> x_range) {
    switch (m.branch) {
        case AlphaBranch::Zero: return {SurfaceTypeLabel::Vertical, {}};
        case AlphaBranch::TanHalf: return {SurfaceTypeLabel::SpecialI, {}};
        case AlphaBranch::TanFull: return {SurfaceTypeLabel::SpecialII, {}};
        case AlphaBranch::General: break;
    }
    if (std::abs(m.c2 - 1.0) <= kClassTol) return {SurfaceTypeLabel::SpecialI, {}};
    if (std::abs(m.c2) <= kClassTol) return {SurfaceTypeLabel::SpecialII, {}};
    if (m.c2 > 1.0 + kClassTol) return {SurfaceTypeLabel::GeneralI, {}};

    // 0 < c2 < 1: sub-classify by position relative to the blow-up points
    // u = +-acos(c2) (mod 2pi), with u = cx + c1.
    const double uc = std::acos(m.c2);  // principal branch onto [0, pi]
    const double u0 = m.c * x_range.first + m.c1;
    const double u1 = m.c * x_range.second + m.c1;
    const double lo = std::min(u0, u1), hi = std::max(u0, u1);
    if (hi - lo >= kTwoPi - 2.0 * uc)
        throw MixedType("x_range spans at least one blow-up point");

    // Any blow-up point strictly inside (lo, hi)?
    const double base = std::floor((lo - uc) / kTwoPi) * kTwoPi;
    for (double off = base; off <= hi + kTwoPi; off += kTwoPi) {
        for (double u : {off + uc, off + kTwoPi - uc}) {
            if (u > lo && u < hi) throw MixedType("x_range straddles a blow-up point");
        }
    }

    const double um = wrap_2pi(0.5 * (lo + hi));
    const SurfaceTypeLabel label =
        (std::cos(um) < m.c2) ? SurfaceTypeLabel::GeneralII : SurfaceTypeLabel::GeneralIII;
    return {label, x_range};
}

std::pair<double, double> canonicalize(double c1, double c2) {
    if (c2 >= 0) return {c1, c2};
    return {wrap_2pi(c1 + 3.141592653589793238462643383279), -c2};
}

std::pair<double, double> metric_from_alpha(const AlphaModel& m, const MetricGauge& gauge,
                                            double x, double y) {
    if (m.branch != AlphaBranch::General)
        throw Error("InvalidModel", "metric form is stated for the General branch");
    const double c = m.c;
    const double u = c * x + m.c1;
    const double den = m.c2 - std::cos(u);
    if (std::abs(den) <= kPoleGuard) throw AtPole("metric form at a pole of alpha");
    const double alpha = 0.5 * c * std::sin(u) / den;
    const double norm = std::sqrt(1.0 + alpha * alpha);
    const double a = (-0.5 * c + 0.5 * c * m.c2 / den + gauge.h(y) / std::abs(den)) / norm;
    const double b = (std::exp(gauge.k(y)) / std::abs(den)) / norm;
    return {a, b};
}

std::vector<PhaseSample> phase_field(double c, const Rectangle& rect, int n_alpha, int n_p) {
    if (n_alpha < 2 || n_p < 2)
        throw Error("InvalidGrid", "phase_field needs at least a 2x2 grid");
    std::vector<PhaseSample> out;
    out.reserve(static_cast<size_t>(n_alpha) * static_cast<size_t>(n_p));
    for (int i = 0; i < n_alpha; ++i) {
        const double a = rect.u0 + (rect.u1 - rect.u0) * i / (n_alpha - 1);
        for (int j = 0; j < n_p; ++j) {
            const double p = rect.v0 + (rect.v1 - rect.v0) * j / (n_p - 1);
            out.push_back({a, p, p, -6.0 * a * p - 4.0 * a * a * a - c * c * a});
        }
    }
    return out;
}

}  // namespace heis
