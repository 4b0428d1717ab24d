#include "heis/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "heis/errors.hpp"
#include "heis/quadrature.hpp"
#include "heis/surface_geom.hpp"

namespace heis {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kVanishTol = 1e-10;

double wrap_pi(double a) {
    // wrap to (-pi, pi]
    double w = std::fmod(a, 2.0 * kPi);
    if (w <= -kPi) w += 2.0 * kPi;
    if (w > kPi) w -= 2.0 * kPi;
    return w;
}

}  // namespace

DeformationData deformation_data(const CurveSpec& c, double lambda, double theta) {
    if (!(lambda > 0)) throw Error("InvalidParam", "deformation data requires lambda > 0");
    const CartVector d = c.d1(theta);
    const double ct = std::cos(theta), st = std::sin(theta);
    DeformationData out;
    out.A = d.dy * ct - d.dx * st;
    out.B = d.dy * st + d.dx * ct;
    const double vy = 0.5 / lambda - out.B;
    out.D = lambda * c.theta_of_velocity(theta) + vy;
    out.normV = std::hypot(out.A, vy);
    if (out.normV <= kVanishTol) throw VanishingV("the deformation has vanishing V (alpha = 0)");
    out.G = out.D / out.normV;
    out.zeta = std::atan2(out.A, vy);
    return out;
}

namespace {

/// Shared quadrature state of one normalization run: fine grid with
/// cumulative integrals plus local adaptive refinement between nodes.
struct DeformPipeline {
    CurveSpec curve;
    double lambda;
    std::vector<double> thetas;
    std::vector<double> zeta_unwrapped;
    std::vector<double> cumD;      // int_theta0^theta_i D
    std::vector<double> cumNormV;  // int_theta0^theta_i ||V||

    double d_at(double th) const { return deformation_data(curve, lambda, th).D; }
    double normv_at(double th) const { return deformation_data(curve, lambda, th).normV; }

    double gamma(double th) const {
        const double integral = interp_integral(cumD, [this](double t) { return d_at(t); }, th);
        return (th - thetas.front()) / (2.0 * lambda) - integral;
    }

    double psi(double th) const {
        const double integral =
            interp_integral(cumNormV, [this](double t) { return normv_at(t); }, th);
        return 2.0 * lambda * integral;
    }

    double psi_inverse(double target) const {
        // bracket on the fine grid, then bisection + Newton to 1e-12
        size_t lo = 0, hi = thetas.size() - 1;
        const double psi_end = 2.0 * lambda * cumNormV.back();
        target = std::clamp(target, 0.0, psi_end);
        while (hi - lo > 1) {
            const size_t mid = (lo + hi) / 2;
            if (2.0 * lambda * cumNormV[mid] <= target)
                lo = mid;
            else
                hi = mid;
        }
        double a = thetas[lo], b = thetas[hi];
        double th = 0.5 * (a + b);
        for (int it = 0; it < 60; ++it) {
            const double f = psi(th) - target;
            if (std::abs(f) <= 1e-12 * std::max(1.0, std::abs(target))) break;
            if (f > 0)
                b = th;
            else
                a = th;
            const double deriv = 2.0 * lambda * normv_at(th);
            double next = th - f / deriv;
            if (!(next > a && next < b)) next = 0.5 * (a + b);
            th = next;
        }
        return th;
    }

    double zeta_at(double th) const {
        // principal value lifted to the branch of the nearest fine sample
        const auto it = std::lower_bound(thetas.begin(), thetas.end(), th);
        size_t idx = std::min<size_t>(it - thetas.begin(), thetas.size() - 1);
        if (idx > 0 && std::abs(thetas[idx - 1] - th) < std::abs(thetas[idx] - th)) --idx;
        const double principal = deformation_data(curve, lambda, th).zeta;
        const double ref = zeta_unwrapped[idx];
        return principal + 2.0 * kPi * std::round((ref - principal) / (2.0 * kPi));
    }

private:
    template <class F>
    double interp_integral(const std::vector<double>& cum, F&& f, double th) const {
        const auto it = std::upper_bound(thetas.begin(), thetas.end(), th);
        size_t idx = it - thetas.begin();
        if (idx == 0) return adaptive_simpson(f, thetas.front(), th, 1e-13);
        --idx;
        if (idx >= thetas.size() - 1 && th >= thetas.back())
            return cum.back() + adaptive_simpson(f, thetas.back(), th, 1e-13);
        return cum[idx] + adaptive_simpson(f, thetas[idx], th, 1e-13);
    }
};

std::shared_ptr<DeformPipeline> build_pipeline(const CurveSpec& c, double lambda,
                                               std::pair<double, double> range, int n) {
    auto pipe = std::make_shared<DeformPipeline>();
    pipe->curve = c;
    pipe->lambda = lambda;
    const int fine = std::max(4 * n, 256);
    pipe->thetas.resize(fine + 1);
    pipe->zeta_unwrapped.resize(fine + 1);
    for (int i = 0; i <= fine; ++i) {
        const double th = range.first + (range.second - range.first) * i / fine;
        pipe->thetas[i] = th;
        const DeformationData d = deformation_data(c, lambda, th);
        if (i == 0) {
            pipe->zeta_unwrapped[i] = d.zeta;
        } else {
            const double prev = pipe->zeta_unwrapped[i - 1];
            pipe->zeta_unwrapped[i] =
                d.zeta + 2.0 * kPi * std::round((prev - d.zeta) / (2.0 * kPi));
        }
    }
    pipe->cumD = cumulative_integral([pipe](double t) { return pipe->d_at(t); }, pipe->thetas, 1e-13);
    pipe->cumNormV =
        cumulative_integral([pipe](double t) { return pipe->normv_at(t); }, pipe->thetas, 1e-13);
    return pipe;
}

}  // namespace

NormalizedInvariants normalize_deformed(const CurveSpec& c, double lambda,
                                        std::pair<double, double> theta_range, int n_samples) {
    if (n_samples < 2) throw Error("InvalidParam", "need at least 2 samples");
    auto pipe = build_pipeline(c, lambda, theta_range, n_samples);

    InvariantProfile prof;
    prof.lambda = lambda;
    prof.gauge_note =
        "zeta1 up to an additive constant, theta_tilde up to translation; "
        "Gamma and Psi anchored to 0 at theta = " +
        std::to_string(theta_range.first);
    const double ttilde_end = pipe->psi(theta_range.second);
    for (int j = 0; j < n_samples; ++j) {
        const double ttilde = ttilde_end * j / (n_samples - 1);
        const double th = pipe->psi_inverse(ttilde);
        const DeformationData d = deformation_data(c, lambda, th);
        prof.theta_tilde.push_back(ttilde);
        prof.zeta1.push_back(pipe->zeta_at(th) - 2.0 * lambda * pipe->gamma(th));
        prof.zeta2.push_back(d.G);
        prof.theta_src.push_back(th);
    }

    NormalChart chart;
    chart.theta_of_ttilde = [pipe](double tt) { return pipe->psi_inverse(tt); };
    chart.gamma_of_theta = [pipe](double th) { return pipe->gamma(th); };
    return {prof, chart};
}

std::pair<double, double> pminimal_invariants(const CurveSpec& c, double theta,
                                              double theta_start) {
    const CartVector d = c.d1(theta);
    const double ct = std::cos(theta), st = std::sin(theta);
    const double A = d.dy * ct - d.dx * st;
    const double zeta2 = c.theta_of_velocity(theta) - A * A;
    auto integrand = [&c](double t) {
        const CartVector dd = c.d1(t);
        return dd.dx * std::cos(t) + dd.dy * std::sin(t);
    };
    const double zeta1 = A - adaptive_simpson(integrand, theta_start, theta, 1e-12);
    return {zeta1, zeta2};
}

NormalizedInvariants pminimal_profile(const CurveSpec& c, std::pair<double, double> theta_range,
                                      int n_samples) {
    if (n_samples < 2) throw Error("InvalidParam", "need at least 2 samples");
    auto integrand = [c](double t) {
        const CartVector dd = c.d1(t);
        return dd.dx * std::cos(t) + dd.dy * std::sin(t);
    };
    std::vector<double> thetas(n_samples);
    for (int j = 0; j < n_samples; ++j)
        thetas[j] = theta_range.first + (theta_range.second - theta_range.first) * j / (n_samples - 1);
    const std::vector<double> cum = cumulative_integral(integrand, thetas, 1e-13);

    InvariantProfile prof;
    prof.lambda = 0.0;
    prof.gauge_note = "p-minimal closed forms; zeta1 quadrature anchored at theta = " +
                      std::to_string(theta_range.first);
    for (int j = 0; j < n_samples; ++j) {
        const double th = thetas[j];
        const CartVector d = c.d1(th);
        const double A = d.dy * std::cos(th) - d.dx * std::sin(th);
        prof.theta_tilde.push_back(th);
        prof.zeta1.push_back(A - cum[j]);
        prof.zeta2.push_back(c.theta_of_velocity(th) - A * A);
        prof.theta_src.push_back(th);
    }
    NormalChart chart;
    chart.theta_of_ttilde = [](double tt) { return tt; };
    // Normal shift of the plane deformation: r~ = r + Gamma with
    // Gamma = int (x1' cos + x2' sin); the fitted phase then equals zeta1.
    const double theta0 = theta_range.first;
    chart.gamma_of_theta = [c, integrand, theta0](double th) {
        return adaptive_simpson(integrand, theta0, th, 1e-12);
    };
    return {prof, chart};
}

double energy(double x, double xp, double tp, double lambda) {
    const double den = x * x * xp * xp + tp * tp;
    if (den <= 1e-30) throw CharacteristicPoint("x^2 x'^2 + t'^2 vanishes");
    return x * tp / std::sqrt(den) + lambda * x * x;
}

NormalizedInvariants rotational_cmc_invariants(double c, double k, double phase, int n_samples) {
    if (c == 0.0) throw Error("InvalidParam", "use rotational_minimal_invariants for c = 0");
    if (k < 1.0) throw BadK("k >= 1 is required");
    const double r = 2.0 * std::sqrt(k - 1.0) / (c * c);
    if (r == 0.0) throw Cylinder("k = 1 gives the cylinder (alpha = 0, no invariants)");
    const double lambda = 0.5 * c;
    const double E = (k - 2.0) / (2.0 * c);
    const double zeta2 = -(2.0 * c * E + 2.0) / (c * c * r);
    const double slope = -2.0 * E / (c * r);

    // Psi(theta) = -2 lambda^2 r theta, Gamma(theta) = -E theta.
    const double psi_rate = -2.0 * lambda * lambda * r;
    InvariantProfile prof;
    prof.lambda = lambda;
    prof.gauge_note = "rotational closed forms; zeta1 intercept fixed by the phase convention";
    const double ttilde_lo = std::min(0.0, psi_rate * 2.0 * kPi);
    const double ttilde_hi = std::max(0.0, psi_rate * 2.0 * kPi);
    for (int j = 0; j < n_samples; ++j) {
        const double tt = ttilde_lo + (ttilde_hi - ttilde_lo) * j / (n_samples - 1);
        prof.theta_tilde.push_back(tt);
        prof.zeta1.push_back(phase + slope * tt);
        prof.zeta2.push_back(zeta2);
        prof.theta_src.push_back(tt / psi_rate);
    }
    NormalChart chart;
    chart.theta_of_ttilde = [psi_rate](double tt) { return tt / psi_rate; };
    chart.gamma_of_theta = [E](double th) { return -E * th; };
    return {prof, chart};
}

NormalizedInvariants rotational_minimal_invariants(double m, int n_samples) {
    if (m == 0.0) throw VanishingV("the horizontal plane has alpha = 0 (no invariants)");
    InvariantProfile prof;
    prof.lambda = 0.0;
    prof.gauge_note = "rotational p-minimal closed forms";
    for (int j = 0; j < n_samples; ++j) {
        const double tt = 2.0 * kPi * j / (n_samples - 1);
        prof.theta_tilde.push_back(tt);
        prof.zeta1.push_back(m * tt);
        prof.zeta2.push_back(m * m);
        prof.theta_src.push_back(tt);
    }
    NormalChart chart;
    chart.theta_of_ttilde = [](double tt) { return tt; };
    chart.gamma_of_theta = [m](double th) { return -m * th; };
    return {prof, chart};
}

namespace {

struct FitResult {
    double zeta1;
    double zeta2;
    double rms;
    bool ok;
};

/// Gauss-Newton fit of alpha samples against the normal form. lambda > 0:
/// alpha = lambda sin(2 lambda s + z1)/(z2 - cos(2 lambda s + z1));
/// lambda = 0: alpha = (s + z1)/((s + z1)^2 + z2).
FitResult fit_normal_form(const std::vector<double>& s, const std::vector<double>& alpha,
                          double lambda, double z1, double z2) {
    const size_t n = s.size();
    if (n < 4) return {z1, z2, 0.0, false};
    auto eval = [lambda](double si, double z1v, double z2v, double* d1, double* d2) {
        if (lambda > 0) {
            const double u = 2.0 * lambda * si + z1v;
            const double den = z2v - std::cos(u);
            if (std::abs(den) < 1e-6) return std::numeric_limits<double>::quiet_NaN();
            if (d1) *d1 = lambda * (z2v * std::cos(u) - 1.0) / (den * den);
            if (d2) *d2 = -lambda * std::sin(u) / (den * den);
            return lambda * std::sin(u) / den;
        }
        const double w = si + z1v;
        const double den = w * w + z2v;
        if (std::abs(den) < 1e-6) return std::numeric_limits<double>::quiet_NaN();
        if (d1) *d1 = (z2v - w * w) / (den * den);
        if (d2) *d2 = -w / (den * den);
        return w / den;
    };
    for (int it = 0; it < 60; ++it) {
        double j11 = 0, j12 = 0, j22 = 0, g1 = 0, g2 = 0;
        size_t used = 0;
        for (size_t i = 0; i < n; ++i) {
            double d1, d2;
            const double model = eval(s[i], z1, z2, &d1, &d2);
            if (std::isnan(model)) continue;
            const double res = model - alpha[i];
            j11 += d1 * d1;
            j12 += d1 * d2;
            j22 += d2 * d2;
            g1 += d1 * res;
            g2 += d2 * res;
            ++used;
        }
        const double det = j11 * j22 - j12 * j12;
        if (used < 4 || std::abs(det) < 1e-300) return {z1, z2, 1e9, false};
        const double dz1 = -(j22 * g1 - j12 * g2) / det;
        const double dz2 = -(-j12 * g1 + j11 * g2) / det;
        z1 += dz1;
        z2 += dz2;
        if (std::abs(dz1) + std::abs(dz2) < 1e-14) break;
    }
    double ss = 0;
    size_t used = 0;
    for (size_t i = 0; i < n; ++i) {
        const double model = eval(s[i], z1, z2, nullptr, nullptr);
        if (std::isnan(model)) continue;
        ss += (model - alpha[i]) * (model - alpha[i]);
        ++used;
    }
    if (used < 4) return {z1, z2, 1e9, false};
    return {z1, z2, std::sqrt(ss / used), true};
}

}  // namespace

CrossValidateReport cross_validate(const ParamSurface& surf, const NormalChart& chart,
                                   const InvariantProfile& profile, int slices,
                                   int samples_per_slice) {
    CrossValidateReport rep;
    const double lambda = profile.lambda;
    const size_t np = profile.theta_tilde.size();
    for (int sl = 0; sl < slices; ++sl) {
        const size_t j = (np <= 1 || slices <= 1) ? 0 : sl * (np - 1) / (slices - 1);
        const double ttilde = profile.theta_tilde[j];
        const double v = chart.theta_of_ttilde(ttilde);
        if (v < surf.domain.v0 || v > surf.domain.v1) continue;
        const double gamma = chart.gamma_of_theta(v);
        const double z1_ref = profile.zeta1[j];
        const double z2_ref = profile.zeta2[j];

        std::vector<double> ss, alphas;
        for (int i = 0; i < samples_per_slice; ++i) {
            const double u =
                surf.domain.u0 + (surf.domain.u1 - surf.domain.u0) * (i + 0.5) / samples_per_slice;
            const double sbar = u + gamma;
            // skip the 1e-2 margin around poles and singular points of the
            // normal form
            if (lambda > 0) {
                const double w = 2.0 * lambda * sbar + z1_ref;
                const double margin = 2.0 * lambda * 1e-2;
                if (std::abs(z2_ref) <= 1.0 + 1e-9) {
                    const double w_pole = std::acos(std::clamp(z2_ref, -1.0, 1.0));
                    const double dist =
                        std::min(std::abs(wrap_pi(w - w_pole)), std::abs(wrap_pi(w + w_pole)));
                    if (dist < margin) continue;
                }
            } else if (z2_ref < 0) {
                const double rt = std::sqrt(-z2_ref);
                const double w = sbar + z1_ref;
                if (std::min(std::abs(w - rt), std::abs(w + rt)) < 1e-2) continue;
            }
            try {
                alphas.push_back(extract_alpha_ab(surf, u, v).alpha);
                ss.push_back(sbar);
            } catch (const Error&) {
                continue;  // singular / near-blowup sample
            }
        }
        if (ss.size() < 6) continue;

        // start the fit away from the reference so convergence is informative
        const FitResult fit = fit_normal_form(ss, alphas, lambda, z1_ref + 0.2,
                                              z2_ref + 0.05 * (1.0 + std::abs(z2_ref)));
        if (!fit.ok) continue;
        const double dz1 = lambda > 0 ? std::abs(wrap_pi(fit.zeta1 - z1_ref))
                                      : std::abs(fit.zeta1 - z1_ref);
        rep.max_dzeta1 = std::max(rep.max_dzeta1, dz1);
        rep.max_dzeta2 = std::max(rep.max_dzeta2, std::abs(fit.zeta2 - z2_ref));
        rep.max_fit_rms = std::max(rep.max_fit_rms, fit.rms);
        rep.ttilde.push_back(ttilde);
        // report the fitted zeta1 on the profile's branch
        rep.fit_zeta1.push_back(lambda > 0 ? z1_ref + wrap_pi(fit.zeta1 - z1_ref) : fit.zeta1);
        rep.fit_zeta2.push_back(fit.zeta2);
        ++rep.slices;
    }
    return rep;
}

}  // namespace heis
