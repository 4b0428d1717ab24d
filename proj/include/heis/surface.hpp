#pragma once

#include <functional>
#include <optional>
#include <string>

#include "heis/codazzi.hpp"
#include "heis/core.hpp"

namespace heis {

/// Point of a parametrized surface together with its first coordinate
/// partials (Cartesian components at the point).
struct SurfaceJet {
    HPoint p;
    CartVector du;
    CartVector dv;
};

/// A parametrized surface (u,v) -> H1 with analytic first partials on a
/// rectangular domain.
struct ParamSurface {
    std::function<SurfaceJet(double, double)> jet;
    Rectangle domain{0, 1, 0, 1};
    std::optional<double> claimed_h;
    std::string tag;

    HPoint at(double u, double v) const { return jet(u, v).p; }
    bool contains(double u, double v) const {
        return u >= domain.u0 && u <= domain.u1 && v >= domain.v0 && v <= domain.v1;
    }
};

}  // namespace heis
