#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heis/errors.hpp"

namespace heis {

/// Denominator magnitudes at or below this value count as a pole of the
/// closed-form solutions.
inline constexpr double kPoleGuard = 1e-12;

/// Classification tolerance for c2 near the type boundaries {0, 1}.
inline constexpr double kClassTol = 1e-9;

enum class AlphaBranch { Zero, TanFull, TanHalf, General };

/// One member of the closed-form solution family of the Codazzi-like
/// equation alpha'' + 6 alpha alpha' + 4 alpha^3 + c^2 alpha = 0:
///
///   Zero:     alpha = 0
///   TanFull:  alpha = -(c/2) tan(c x + c K1)            (c2 = 0 family)
///   TanHalf:  alpha = -(c/2) tan((c/2) x - (c/2) K2)    (c2 = 1 family)
///   General:  alpha = (c/2) sin(c x + c1) / (c2 - cos(c x + c1))
///
/// General-branch parameters are stored canonicalized to c2 >= 0; the raw
/// sign is retained in raw_c2_negative.
struct AlphaModel {
    double c = 0.0;
    AlphaBranch branch = AlphaBranch::Zero;
    double c1 = 0.0;              // General phase
    double c2 = 0.0;              // General shape, canonical (>= 0)
    double shift = 0.0;           // K1 or K2 for the tan branches
    bool raw_c2_negative = false;

    static AlphaModel zero(double c) { return {c, AlphaBranch::Zero, 0, 0, 0, false}; }
    static AlphaModel tan_full(double c, double k1) {
        return {c, AlphaBranch::TanFull, 0, 0, k1, false};
    }
    static AlphaModel tan_half(double c, double k2) {
        return {c, AlphaBranch::TanHalf, 0, 0, k2, false};
    }
    static AlphaModel general(double c, double c1, double c2);
};

enum class SurfaceTypeLabel { Vertical, SpecialI, SpecialII, GeneralI, GeneralII, GeneralIII };

struct SurfaceType {
    SurfaceTypeLabel label;
    /// x-interval used for the GeneralII/GeneralIII sub-classification.
    std::optional<std::pair<double, double>> x_interval;
};

std::string to_string(SurfaceTypeLabel label);

/// Gauge freedom of the induced metric: h(y) and k(y) of the metric-form
/// proposition. The normal form corresponds to h = -(c/2) c2 and
/// k = ln(c^2/2).
struct MetricGauge {
    std::function<double(double)> h;
    std::function<double(double)> k;
};

struct AlphaJet {
    double alpha;
    double alpha_x;
    double alpha_xx;
};

double alpha_eval(const AlphaModel& model, double x);
AlphaJet alpha_derivs(const AlphaModel& model, double x);

/// Residual of the Codazzi-like equation using analytic derivatives.
double codazzi_residual(const AlphaModel& model, double x);

SurfaceType classify(const AlphaModel& model, std::pair<double, double> x_range);

/// Maps (c1, c2) with negative c2 onto the equivalent representative with
/// c2 >= 0 (phase shifted by pi). alpha_eval is invariant under this map.
std::pair<double, double> canonicalize(double c1, double c2);

/// Induced metric components (a, b) for a General-branch alpha under the
/// gauge (h, k).
std::pair<double, double> metric_from_alpha(const AlphaModel& model, const MetricGauge& gauge,
                                            double x, double y);

struct PhaseSample {
    double alpha;
    double p;
    double dalpha;
    double dp;
};

struct Rectangle {
    double u0, u1, v0, v1;
};

/// Samples the first-order system (alpha' = p, p' = -6 alpha p - 4 alpha^3
/// - c^2 alpha) on a grid over rect, row-major in (alpha, p).
std::vector<PhaseSample> phase_field(double c, const Rectangle& rect, int n_alpha, int n_p);

}  // namespace heis
