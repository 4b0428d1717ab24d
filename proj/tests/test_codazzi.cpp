#include <doctest.h>

#include <cmath>
#include <random>

#include "heis/codazzi.hpp"

using namespace heis;

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

// central finite differences, the independent oracle for the analytic jets
double fd1(const AlphaModel& m, double x, double h) {
    return (alpha_eval(m, x + h) - alpha_eval(m, x - h)) / (2 * h);
}
double fd2(const AlphaModel& m, double x, double h) {
    return (alpha_eval(m, x + h) - 2 * alpha_eval(m, x) + alpha_eval(m, x - h)) / (h * h);
}

}  // namespace

TEST_CASE("alpha evaluation") {
    // (c/2) sin(c x + c1)/(c2 - cos(c x + c1)) at c=2, x=pi/4: sin(pi/2)/(2-cos(pi/2)) = 1/2
    const AlphaModel m = AlphaModel::general(2, 0, 2);
    CHECK(alpha_eval(m, kPi / 4) == doctest::Approx(0.5).epsilon(1e-15));

    // periodicity with period 2 pi / c
    const AlphaModel mp = AlphaModel::general(1.5, 0.4, 3.0);
    CHECK(alpha_eval(mp, 0.37 + 2 * kPi / 1.5) == doctest::Approx(alpha_eval(mp, 0.37)).epsilon(1e-13));
    const AlphaModel mt = AlphaModel::tan_full(1.5, 0.2);
    CHECK(alpha_eval(mt, 0.37 + 2 * kPi / 1.5) == doctest::Approx(alpha_eval(mt, 0.37)).epsilon(1e-12));

    CHECK(alpha_eval(AlphaModel::zero(2.0), 1.234) == 0.0);
}

TEST_CASE("alpha pole guard") {
    const AlphaModel m = AlphaModel::general(1, 0, 0.5);  // pole at cos(x) = 0.5
    CHECK_THROWS_AS(alpha_eval(m, std::acos(0.5)), AtPole);
}

TEST_CASE("analytic derivatives at the paper's marked points") {
    const double c = 1.7, c1 = 0.6;

    // general c2, at the zero x = (pi - c1)/c: alpha' = -(c^2/2)/(c2+1)
    for (double c2 : {0.5, 2.0, 5.0}) {
        const AlphaModel m = AlphaModel::general(c, c1, c2);
        const AlphaJet j = alpha_derivs(m, (kPi - c1) / c);
        CHECK(j.alpha == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(j.alpha_x == doctest::Approx(-0.5 * c * c / (c2 + 1)).epsilon(1e-13));
    }

    // c2 > 1, at x = -c1/c: alpha' = (c^2/2)/(c2-1) > 0
    const AlphaModel m2 = AlphaModel::general(c, c1, 3.0);
    CHECK(alpha_derivs(m2, -c1 / c).alpha_x == doctest::Approx(0.5 * c * c / 2.0).epsilon(1e-13));

    // special type I (c2=1): alpha'((pi-c1)/c) = -c^2/4
    const AlphaModel ms = AlphaModel::general(c, c1, 1.0);
    CHECK(alpha_derivs(ms, (kPi - c1) / c).alpha_x == doctest::Approx(-c * c / 4).epsilon(1e-13));

    // special type II (c2=0): alpha'(-c1/c) = -c^2/2
    const AlphaModel mz = AlphaModel::general(c, c1, 0.0);
    CHECK(alpha_derivs(mz, -c1 / c).alpha_x == doctest::Approx(-c * c / 2).epsilon(1e-13));
}

TEST_CASE("analytic derivatives match finite differences") {
    std::mt19937 rng(100);
    std::uniform_real_distribution<double> uc(0.5, 3.0), ux(-3.0, 3.0), uc2(0.0, 5.0),
        uphase(0.0, 2 * kPi);
    const double h = 1e-5;
    int checked = 0;
    while (checked < 300) {
        AlphaModel m;
        switch (checked % 4) {
            case 0: m = AlphaModel::general(uc(rng), uphase(rng), uc2(rng)); break;
            case 1: m = AlphaModel::tan_full(uc(rng), uphase(rng)); break;
            case 2: m = AlphaModel::tan_half(uc(rng), uphase(rng)); break;
            default: m = AlphaModel::zero(uc(rng)); break;
        }
        const double x = ux(rng);
        try {
            const AlphaJet j = alpha_derivs(m, x);
            if (std::abs(j.alpha) > 50) continue;  // stay away from poles
            const double d1 = fd1(m, x, h), d2 = fd2(m, x, h);
            CHECK(j.alpha_x == doctest::Approx(d1).epsilon(1e-6));
            if (std::abs(d2) > 1e-6) CHECK(j.alpha_xx == doctest::Approx(d2).epsilon(1e-4));
            ++checked;
        } catch (const AtPole&) {
            continue;
        }
    }
}

TEST_CASE("codazzi residual vanishes on the solution family") {
    CHECK(std::abs(codazzi_residual(AlphaModel::general(1.5, 0.3, 2.0), 0.7)) < 1e-10);
    CHECK(codazzi_residual(AlphaModel::zero(2.0), 1.0) == 0.0);
    CHECK(std::abs(codazzi_residual(AlphaModel::tan_half(2.0, 0.0), 0.4)) < 1e-10);
    CHECK(std::abs(codazzi_residual(AlphaModel::tan_full(2.0, 0.1), 0.4)) < 1e-10);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> uc(0.5, 3.0), uc2(0.0, 5.0), up(0.0, 2 * kPi);
    int checked = 0;
    while (checked < 500) {
        const AlphaModel m = AlphaModel::general(uc(rng), up(rng), uc2(rng));
        const double x = up(rng);
        const double den = m.c2 - std::cos(m.c * x + m.c1);
        if (std::abs(den) < 0.05 * (1 + m.c2)) continue;
        CHECK(std::abs(codazzi_residual(m, x)) < 1e-9);
        ++checked;
    }
}

TEST_CASE("classification") {
    CHECK(classify(AlphaModel::general(1, 0, 2), {0.0, 1.0}).label == SurfaceTypeLabel::GeneralI);
    CHECK(classify(AlphaModel::general(1, 0, 1), {0.0, 1.0}).label == SurfaceTypeLabel::SpecialI);
    CHECK(classify(AlphaModel::zero(1), {0.0, 1.0}).label == SurfaceTypeLabel::Vertical);
    CHECK(classify(AlphaModel::general(1, 0, 0), {0.0, 1.0}).label == SurfaceTypeLabel::SpecialII);
    CHECK(classify(AlphaModel::tan_half(2, 0), {0.0, 1.0}).label == SurfaceTypeLabel::SpecialI);
    CHECK(classify(AlphaModel::tan_full(2, 0), {0.0, 1.0}).label == SurfaceTypeLabel::SpecialII);

    // 0 < c2 < 1: the blow-up points split type II from type III
    const double c2 = 0.5, acos_c2 = std::acos(0.5);
    const AlphaModel m = AlphaModel::general(1, 0, c2);
    const SurfaceType t2 = classify(m, {acos_c2 + 0.01, 2 * kPi - acos_c2 - 0.01});
    CHECK(t2.label == SurfaceTypeLabel::GeneralII);
    CHECK(t2.x_interval.has_value());
    CHECK(classify(m, {-acos_c2 + 0.01, acos_c2 - 0.01}).label == SurfaceTypeLabel::GeneralIII);
    CHECK_THROWS_AS(classify(m, {0.0, kPi}), MixedType);
}

TEST_CASE("canonicalize") {
    const auto [a1, a2] = canonicalize(0.3, 2.0);
    CHECK(a1 == 0.3);
    CHECK(a2 == 2.0);

    const auto [b1, b2] = canonicalize(0.0, -1.0);
    CHECK(b1 == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(b2 == 1.0);

    // alpha is invariant under the map
    const double c = 2.0, x = 0.9;
    const auto [c1c, c2c] = canonicalize(0.7, -1.8);
    const AlphaModel raw{c, AlphaBranch::General, 0.7, -1.8, 0, false};  // bypass factory
    const AlphaModel canon = AlphaModel::general(c, c1c, c2c);
    CHECK(alpha_eval(raw, x) == doctest::Approx(alpha_eval(canon, x)).epsilon(1e-13));
}

TEST_CASE("classification is canonicalize-invariant") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> uc2(0.0, 3.0), up(0.0, 2 * kPi);
    for (int it = 0; it < 100; ++it) {
        const double c = 1.3, c1 = up(rng), c2 = uc2(rng);
        const auto [c1p, c2p] = canonicalize(c1, -c2);
        const AlphaModel canon = AlphaModel::general(c, c1p, c2p);
        const AlphaModel plain = AlphaModel::general(c, c1, c2);
        // compare on ranges shifted by the same phase, off blow-ups
        const double x0 = (0.2 - c1) / c, x0p = (0.2 - c1p) / c;
        try {
            const auto ta = classify(plain, {x0, x0 + 0.3});
            const auto tb = classify(canon, {x0p, x0p + 0.3});
            CHECK(ta.label == tb.label);
        } catch (const MixedType&) {
            continue;
        }
    }
}

TEST_CASE("special type II has period pi/c") {
    const double c = 2.3;
    const AlphaModel m = AlphaModel::general(c, 0.4, 0.0);
    for (double x : {0.1, 0.45, 1.2}) {
        double a0, a1;
        try {
            a0 = alpha_eval(m, x);
            a1 = alpha_eval(m, x + kPi / c);
        } catch (const AtPole&) {
            continue;
        }
        CHECK(a0 == doctest::Approx(a1).epsilon(1e-12));
    }
}

TEST_CASE("blow-up bracketing for general type II") {
    // alpha -> +inf approaching (-c1 + acos c2)/c from the right
    const double c = 1.4, c1 = 0.3, c2 = 0.6;
    const AlphaModel m = AlphaModel::general(c, c1, c2);
    const double x_star = (-c1 + std::acos(c2)) / c;
    CHECK(alpha_eval(m, x_star + 1e-6) > 0);
    CHECK(alpha_eval(m, x_star - 1e-6) < 0);
}

TEST_CASE("metric form under the normal gauge") {
    const double c = 2.0, c1 = 0.35;
    const double c2 = 2.5;
    const AlphaModel m = AlphaModel::general(c, c1, c2);
    MetricGauge gauge;
    gauge.h = [c, c2](double) { return -0.5 * c * c2; };
    gauge.k = [c](double) { return std::log(0.5 * c * c); };
    for (double x : {0.1, 0.7, 1.9}) {
        const AlphaJet j = alpha_derivs(m, x);
        const double norm = std::sqrt(1 + j.alpha * j.alpha);
        const auto [a, b] = metric_from_alpha(m, gauge, x, 0.0);
        CHECK(a == doctest::Approx(-0.5 * c / norm).epsilon(1e-13));
        const double den = std::abs(c2 - std::cos(c * x + c1));
        CHECK(b == doctest::Approx(0.5 * c * c / (den * norm)).epsilon(1e-13));
        CHECK(b > 0);
    }
}

TEST_CASE("phase field samples") {
    const auto samples = phase_field(1.5, {-1, 1, -1, 1}, 3, 3);
    REQUIRE(samples.size() == 9);
    // equilibrium at the origin (row-major center)
    CHECK(samples[4].alpha == 0.0);
    CHECK(samples[4].dalpha == 0.0);
    CHECK(samples[4].dp == 0.0);

    // (alpha, p) = (1, 0): dp = -4 - c^2 = -6.25
    const auto f = phase_field(1.5, {1, 1, 0, 0}, 2, 2);
    CHECK(f[0].dp == doctest::Approx(-6.25).epsilon(1e-15));

    // odd symmetry of the field
    for (const auto& s : samples) {
        const double dp_neg = -6 * (-s.alpha) * (-s.p) - 4 * std::pow(-s.alpha, 3) - 1.5 * 1.5 * (-s.alpha);
        CHECK(dp_neg == doctest::Approx(-s.dp).epsilon(1e-12));
    }
}
