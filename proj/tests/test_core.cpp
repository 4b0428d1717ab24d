#include <doctest.h>

#include <cmath>
#include <random>

#include "heis/core.hpp"

using namespace heis;

namespace {

// differential of left translation by p: constant matrix
// [[1,0,0],[0,1,0],[y_p,-x_p,1]]
CartVector push_left(const HPoint& p, const CartVector& v) {
    return {v.dx, v.dy, p.y * v.dx - p.x * v.dy + v.dz};
}

}  // namespace

TEST_CASE("group law") {
    const HPoint e{0, 0, 0};
    const HPoint q{1, 2, 3};
    const HPoint id = group_mul(e, q);
    CHECK(id.x == 1.0);
    CHECK(id.y == 2.0);
    CHECK(id.z == 3.0);

    // direct evaluation of the twisted product
    const HPoint r = group_mul({1, 0, 0}, {0, 1, 0});
    CHECK(r.x == 1.0);
    CHECK(r.y == 1.0);
    CHECK(r.z == -1.0);

    const HPoint p{2, -3, 5};
    const HPoint pp = group_mul(p, group_inv(p));
    CHECK(pp.x == 0.0);
    CHECK(pp.y == 0.0);
    CHECK(pp.z == 0.0);
}

TEST_CASE("group inverse") {
    const HPoint z = group_inv({0, 0, 0});
    CHECK(z.x == 0.0);
    CHECK(z.z == 0.0);

    const HPoint q = group_inv({1, 2, 3});  // solve p o q = e
    CHECK(q.x == -1.0);
    CHECK(q.y == -2.0);
    CHECK(q.z == -3.0);

    const HPoint p{0.5, -0.1, 7};
    const HPoint p2 = group_inv(group_inv(p));
    CHECK(p2.x == p.x);
    CHECK(p2.y == p.y);
    CHECK(p2.z == p.z);
}

TEST_CASE("associativity on random rational inputs") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> num(-8, 8);
    for (int it = 0; it < 200; ++it) {
        auto rat = [&] { return HPoint{num(rng) / 4.0, num(rng) / 4.0, num(rng) / 4.0}; };
        const HPoint p = rat(), q = rat(), r = rat();
        const HPoint lhs = group_mul(group_mul(p, q), r);
        const HPoint rhs = group_mul(p, group_mul(q, r));
        CHECK(lhs.x == rhs.x);
        CHECK(lhs.y == rhs.y);
        CHECK(lhs.z == rhs.z);
    }
}

TEST_CASE("frame fields") {
    const Frame f0 = frame_at({0, 0, 0});
    CHECK(f0.e1.dx == 1.0);
    CHECK(f0.e1.dz == 0.0);
    CHECK(f0.e2.dy == 1.0);
    CHECK(f0.t.dz == 1.0);

    const Frame f = frame_at({1, 2, 0});
    CHECK(f.e1.dz == 2.0);   // e1 = (1, 0, y)
    CHECK(f.e2.dz == -1.0);  // e2 = (0, 1, -x)

    const HPoint p{3, -4, 1};
    CHECK(contact_theta(p, frame_at(p).e1) == 0.0);
}

TEST_CASE("contact form") {
    const HPoint p{2, 5, -1};
    CHECK(contact_theta(p, frame_at(p).t) == 1.0);
    CHECK(contact_theta(p, frame_at(p).e2) == 0.0);
    CHECK(contact_theta({1, 1, 0}, {1, 1, 1}) == 1.0);
}

TEST_CASE("J rotation") {
    const FrameVector je1 = j_apply({1, 0, 0});
    CHECK(je1.c1 == 0.0);
    CHECK(je1.c2 == 1.0);

    const FrameVector je2 = j_apply({0, 1, 0});
    CHECK(je2.c1 == -1.0);
    CHECK(je2.c2 == 0.0);

    const FrameVector v{3, 4, 0};
    const FrameVector jjv = j_apply(j_apply(v));
    CHECK(jjv.c1 == -v.c1);
    CHECK(jjv.c2 == -v.c2);

    CHECK_THROWS_AS(j_apply({1, 0, 0.5}), NotHorizontal);
}

TEST_CASE("adapted metric") {
    CHECK(adapted_inner({1, 0, 0}, {0, 1, 0}) == 0.0);
    CHECK(adapted_inner({0, 0, 1}, {0, 0, 1}) == 1.0);
    CHECK(adapted_inner({3, 4, 0}, {3, 4, 0}) == 25.0);
}

TEST_CASE("J preserves the adapted inner product on horizontal vectors") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int it = 0; it < 100; ++it) {
        const FrameVector v{u(rng), u(rng), 0}, w{u(rng), u(rng), 0};
        CHECK(adapted_inner(j_apply(v), j_apply(w)) == doctest::Approx(adapted_inner(v, w)).epsilon(1e-15));
    }
}

TEST_CASE("cart/frame conversion") {
    const FrameVector w0 = cart_to_frame({0, 0, 0}, {1, 2, 3});
    CHECK(w0.c1 == 1.0);
    CHECK(w0.c2 == 2.0);
    CHECK(w0.c0 == 3.0);

    // solve the 3x3 linear system by hand: at p=(1,0,0), v = c1*(1,0,0) +
    // c2*(0,1,-1) + c0*(0,0,1) = (0,1,1) gives (0,1,2)
    const FrameVector w = cart_to_frame({1, 0, 0}, {0, 1, 1});
    CHECK(w.c1 == 0.0);
    CHECK(w.c2 == 1.0);
    CHECK(w.c0 == 2.0);

    const HPoint p{5, 5, 5};
    const FrameVector rt = cart_to_frame(p, frame_to_cart(p, {0.1, -0.2, 0.3}));
    CHECK(rt.c1 == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(rt.c2 == doctest::Approx(-0.2).epsilon(1e-15));
    CHECK(rt.c0 == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("theta vanishes exactly on the horizontal part of the frame") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int it = 0; it < 100; ++it) {
        const HPoint p{u(rng), u(rng), u(rng)};
        const CartVector v{u(rng), u(rng), u(rng)};
        const double th = contact_theta(p, v);
        const FrameVector w = cart_to_frame(p, v);
        CHECK(w.c0 == doctest::Approx(th).epsilon(1e-15));
        CHECK(((std::abs(th) < 1e-12) == (std::abs(w.c0) < 1e-12)));
    }
}

TEST_CASE("left invariance of the frame fields") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int it = 0; it < 50; ++it) {
        const HPoint p{u(rng), u(rng), u(rng)}, q{u(rng), u(rng), u(rng)};
        const HPoint pq = group_mul(p, q);
        const Frame fq = frame_at(q), fpq = frame_at(pq);
        for (auto [vq, vpq] : {std::pair{fq.e1, fpq.e1}, {fq.e2, fpq.e2}, {fq.t, fpq.t}}) {
            const CartVector pushed = push_left(p, vq);
            CHECK(pushed.dx == doctest::Approx(vpq.dx).epsilon(1e-14));
            CHECK(pushed.dy == doctest::Approx(vpq.dy).epsilon(1e-14));
            CHECK(std::abs(pushed.dz - vpq.dz) < 1e-14 * (1.0 + std::abs(vpq.dz)));
        }
    }
}
