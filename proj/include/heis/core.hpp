#pragma once

#include <cmath>

#include "heis/errors.hpp"

namespace heis {

/// A point of H1 in exponential coordinates.
struct HPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Cartesian components of a tangent vector at some base point.
struct CartVector {
    double dx = 0.0;
    double dy = 0.0;
    double dz = 0.0;
};

/// Components of a tangent vector in the left-invariant frame (e1, e2, T).
struct FrameVector {
    double c1 = 0.0;
    double c2 = 0.0;
    double c0 = 0.0;

    bool is_horizontal(double eps = 0.0) const { return std::abs(c0) <= eps; }
};

inline FrameVector operator+(FrameVector a, FrameVector b) {
    return {a.c1 + b.c1, a.c2 + b.c2, a.c0 + b.c0};
}
inline FrameVector operator-(FrameVector a, FrameVector b) {
    return {a.c1 - b.c1, a.c2 - b.c2, a.c0 - b.c0};
}
inline FrameVector operator*(double s, FrameVector v) { return {s * v.c1, s * v.c2, s * v.c0}; }
inline FrameVector operator-(FrameVector v) { return {-v.c1, -v.c2, -v.c0}; }

/// Group multiplication (x1,y1,z1)o(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+y1*x2-x1*y2).
inline HPoint group_mul(const HPoint& p, const HPoint& q) {
    return {p.x + q.x, p.y + q.y, p.z + q.z + p.y * q.x - p.x * q.y};
}

inline HPoint group_inv(const HPoint& p) { return {-p.x, -p.y, -p.z}; }

struct Frame {
    CartVector e1;  // (1, 0, y)
    CartVector e2;  // (0, 1, -x)
    CartVector t;   // (0, 0, 1)
};

/// Left-invariant frame evaluated at p.
inline Frame frame_at(const HPoint& p) {
    return {{1.0, 0.0, p.y}, {0.0, 1.0, -p.x}, {0.0, 0.0, 1.0}};
}

/// Contact form Theta = dz + x dy - y dx evaluated on v at p.
inline double contact_theta(const HPoint& p, const CartVector& v) {
    return v.dz + p.x * v.dy - p.y * v.dx;
}

/// CR rotation J on the contact plane: J(e1)=e2, J(e2)=-e1.
/// Rejects non-horizontal input.
inline FrameVector j_apply(const FrameVector& v) {
    if (v.c0 != 0.0) throw NotHorizontal("J is defined on the contact plane only");
    return {-v.c2, v.c1, 0.0};
}

/// Adapted metric: (e1, e2, T) orthonormal.
inline double adapted_inner(const FrameVector& v, const FrameVector& w) {
    return v.c1 * w.c1 + v.c2 * w.c2 + v.c0 * w.c0;
}

inline double frame_norm(const FrameVector& v) { return std::sqrt(adapted_inner(v, v)); }

/// Change of basis: Cartesian components -> frame components at p.
/// The T-component equals Theta_p(v).
inline FrameVector cart_to_frame(const HPoint& p, const CartVector& v) {
    return {v.dx, v.dy, v.dz - p.y * v.dx + p.x * v.dy};
}

inline CartVector frame_to_cart(const HPoint& p, const FrameVector& w) {
    return {w.c1, w.c2, w.c1 * p.y - w.c2 * p.x + w.c0};
}

}  // namespace heis
