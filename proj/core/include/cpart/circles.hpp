#pragma once

#include "cpart/geom.hpp"

#include <cstdint>

namespace cpart {

struct Circle {
    Point center;
    double radius = 0;
};

struct Disk {
    Point center;
    double radius = 0;
};

struct AspectReport {
    Circle circumcircle;
    Disk indisk;
    double gamma = 0;
};

// Welzl-style move-to-front construction over a seeded shuffle
Circle min_enclosing_circle(const std::vector<Point>& points, std::uint64_t seed = 0);
// Tries every diametral pair and every triple. O(n^4), for checking only.
Circle min_enclosing_circle_brute(const std::vector<Point>& points);

// Chebyshev disk by bisection on r over inward-offset half-plane clipping.
Disk max_inscribed_disk(const ConvexPolygon& poly);

AspectReport aspect_ratio(const ConvexPolygon& poly);
inline double gamma_one(const ConvexPolygon& poly) { return aspect_ratio(poly).gamma; }

Circle circle_through(Point a, Point b, Point c);

}  // namespace cpart
