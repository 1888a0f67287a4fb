#include "support.hpp"

#include <doctest.h>

using namespace cpart;

namespace {
const ConvexPolygon unit_sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
}

TEST_CASE("orientation signs")
{
    CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(1.0));
    CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == 0.0);
    CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == doctest::Approx(-1.0));
}

TEST_CASE("orientation is antisymmetric")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 200; ++i) {
        Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)};
        double o = orientation(p, q, r);
        CHECK(orientation(q, p, r) == doctest::Approx(-o));
        CHECK(orientation(p, r, q) == doctest::Approx(-o));
        CHECK(orientation(r, q, p) == doctest::Approx(-o));
    }
}

TEST_CASE("clockwise input is reversed")
{
    ConvexPolygon p{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    CHECK(signed_area(p.vertices()) > 0);
    CHECK_THROWS_AS(ConvexPolygon({{0, 0}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("interior angles")
{
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(interior_angle(unit_sq, i) == doctest::Approx(90.0).epsilon(1e-12));
    auto tri = regular_polygon(3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(interior_angle(tri, i) == doctest::Approx(60.0).epsilon(1e-12));
    auto pent = regular_polygon(5);
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(interior_angle(pent, i) == doctest::Approx(108.0).epsilon(1e-12));
    CHECK_THROWS(interior_angle(ConvexPolygon{{0, 0}, {1, 0}, {1, 0}, {0, 1}}, 1));
}

TEST_CASE("angle sum of convex polygons")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        auto p = support::random_convex(rng, 12);
        double s = 0;
        for (std::size_t k = 0; k < p.size(); ++k)
            s += interior_angle(p, k);
        CHECK(std::abs(s - (p.size() - 2) * 180.0) <= p.size() * tau_angle);
    }
}

TEST_CASE("areas")
{
    CHECK(polygon_area(unit_sq) == doctest::Approx(1.0));
    ConvexPolygon tri{{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2}};
    CHECK(polygon_area(tri) == doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-14));
    // (1,0) sits on the hull edge; hand shoelace over the three hull corners gives 1
    ConvexPolygon quad{{0, 0}, {1, 0}, {2, 0}, {0, 1}};
    CHECK(polygon_area(quad) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("intersection area examples")
{
    auto shift = [](Point d) { return ConvexPolygon{{d.x, d.y}, {1 + d.x, d.y}, {1 + d.x, 1 + d.y}, {d.x, 1 + d.y}}; };
    CHECK(intersection_area(unit_sq, unit_sq) == doctest::Approx(1.0));
    CHECK(intersection_area(unit_sq, shift({1, 0})) == doctest::Approx(0.0));
    // overlap [0.5,1]^2
    CHECK(intersection_area(unit_sq, shift({0.5, 0.5})) == doctest::Approx(0.25));
}

TEST_CASE("intersection area is symmetric and bounded")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        auto a = support::random_convex(rng, 10), b = support::random_convex(rng, 10);
        double ab = intersection_area(a, b), ba = intersection_area(b, a);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-9));
        CHECK(ab <= std::min(polygon_area(a), polygon_area(b)) + 1e-12);
    }
}

TEST_CASE("convexity and containment helpers")
{
    CHECK(is_convex(unit_sq));
    CHECK_FALSE(is_convex(ConvexPolygon{{0, 0}, {2, 0}, {1, 0.5}, {2, 2}, {0, 2}}));
    CHECK(has_collinear_vertex(ConvexPolygon{{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(contains(unit_sq, {1, 0.5}));
    CHECK_FALSE(contains(unit_sq, {1.001, 0.5}));
}
