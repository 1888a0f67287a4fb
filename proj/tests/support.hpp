#pragma once

#include "cpart/bounds.hpp"
#include "cpart/partition.hpp"

#include <algorithm>
#include <random>

namespace support {

using cpart::Point;

// Andrew's monotone chain
inline std::vector<Point> hull(std::vector<Point> p)
{
    std::sort(p.begin(), p.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    std::vector<Point> h(2 * p.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        while (k >= 2 && cpart::orientation(h[k - 2], h[k - 1], p[i]) <= 0)
            --k;
        h[k++] = p[i];
    }
    for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cpart::orientation(h[k - 2], h[k - 1], p[i]) <= 0)
            --k;
        h[k++] = p[i];
    }
    h.resize(k - 1);
    return h;
}

inline cpart::ConvexPolygon random_convex(std::mt19937_64& rng, int max_vertices)
{
    std::uniform_real_distribution<double> u(0, 1);
    std::uniform_int_distribution<int> n(3, max_vertices);
    for (;;) {
        std::vector<Point> pts;
        int m = n(rng);
        for (int i = 0; i < m; ++i)
            pts.push_back({u(rng), u(rng)});
        auto h = hull(pts);
        if (h.size() >= 3 && cpart::signed_area(h) > 1e-3)
            return cpart::ConvexPolygon(h);
    }
}

// min distance to the edge lines; a grid scan followed by nested golden-section
// refinement, which is exact for this concave function
inline double grid_inradius(const cpart::ConvexPolygon& poly, int n = 300)
{
    const auto& v = poly.vertices();
    std::vector<Point> nrm;
    std::vector<double> off;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Point e = v[(i + 1) % v.size()] - v[i];
        Point in = cpart::unit(Point{-e.y, e.x});
        nrm.push_back(in);
        off.push_back(cpart::dot(in, v[i]));
    }
    auto depth = [&](double x, double y) {
        double d = 1e300;
        for (std::size_t i = 0; i < nrm.size(); ++i)
            d = std::min(d, nrm[i].x * x + nrm[i].y * y - off[i]);
        return d;
    };
    double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
    for (auto& p : v) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }
    double best = -1e300;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            best = std::max(best, depth(x0 + (x1 - x0) * i / n, y0 + (y1 - y0) * j / n));

    auto golden = [](double lo, double hi, auto&& f) {
        const double g = (std::sqrt(5.0) - 1) / 2;
        double a = hi - g * (hi - lo), b = lo + g * (hi - lo), fa = f(a), fb = f(b);
        for (int it = 0; it < 120 && hi - lo > 1e-15; ++it) {
            if (fa < fb) {
                lo = a;
                a = b;
                fa = fb;
                b = lo + g * (hi - lo);
                fb = f(b);
            } else {
                hi = b;
                b = a;
                fb = fa;
                a = hi - g * (hi - lo);
                fa = f(a);
            }
        }
        return std::max(fa, fb);
    };
    auto column = [&](double x) { return golden(y0, y1, [&](double y) { return depth(x, y); }); };
    return std::max(best, golden(x0, x1, column));
}

// partition ratio strictly above the one-angle bound of the host's smallest corner
inline bool beats_one_angle_bound(const cpart::Partition& p)
{
    return cpart::partition_gamma(p).gamma > cpart::gamma_theta(cpart::min_host_angle(p));
}


// smallest circle over all point pairs and triples that contains every point
inline double mec_oracle(const std::vector<Point>& p)
{
    if (p.size() == 1)
        return 0;
    auto covers = [&](Point c, double r) {
        for (auto& q : p)
            if (cpart::dist(c, q) > r * (1 + 1e-12) + 1e-12)
                return false;
        return true;
    };
    double best = 1e300;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            Point c = cpart::lerp(p[i], p[j], 0.5);
            double r = cpart::dist(p[i], p[j]) / 2;
            if (r < best && covers(c, r))
                best = r;
            for (std::size_t k = j + 1; k < p.size(); ++k) {
                Point a = p[i], b = p[j], d = p[k];
                double den = 2 * (a.x * (b.y - d.y) + b.x * (d.y - a.y) + d.x * (a.y - b.y));
                if (std::abs(den) < 1e-15)
                    continue;
                double a2 = cpart::dot(a, a), b2 = cpart::dot(b, b), d2 = cpart::dot(d, d);
                Point o{(a2 * (b.y - d.y) + b2 * (d.y - a.y) + d2 * (a.y - b.y)) / den,
                        (a2 * (d.x - b.x) + b2 * (a.x - d.x) + d2 * (b.x - a.x)) / den};
                double rr = cpart::dist(o, a);
                if (rr < best && covers(o, rr))
                    best = rr;
            }
        }
    return best;
}

// slant line through the origin at angle theta; unit disk in the left wedge, second disk in the
// right wedge tangent to the base and to the slant line at the unit disk's contact point
inline double touching_radius_oracle(double theta)
{
    double t = cpart::rad(theta);
    Point u{std::cos(t), std::sin(t)};
    Point c1{-std::tan(t / 2), 1};
    Point contact = u * dot(c1, u);
    Point n{std::sin(t), -std::cos(t)};   // unit normal into the right wedge
    // centre contact + r n has height r
    return contact.y / (1 - n.y);
}

// the angle above q left between the second tangents from q to both disks
inline double phi_oracle(double theta, double gamma)
{
    double t = cpart::rad(theta);
    Point d{std::cos(t), std::sin(t)};
    Point c1{1 / std::tan(t / 2), 1};
    Point p{c1.x + std::tan(t / 2), 0};
    double r = touching_radius_oracle(theta);
    Point c2 = p + unit(Point{1, 0} + d) * (r / std::sin(t / 2));
    // circumcircles of radius gamma * inradius through each cpart::piece's feet; the cpart::piece
    // holding disk 1 has feet 0 and p, the one holding disk 2 is the same shape scaled by r
    auto circle = [&](Point a, Point b, double R) {
        Point m = lerp(a, b, 0.5);
        double hh = dist(a, b) / 2;
        return std::pair{m + Point{0, std::sqrt(R * R - hh * hh)}, R};
    };
    auto [o1, R1] = circle({0, 0}, p, gamma);
    auto [o2, R2] = circle(p, p + Point{p.x * r, 0}, gamma * r);
    auto reach = [&](Point o, double R) {
        Point f = p - o;
        double b = dot(f, d), c = dot(f, f) - R * R;
        return -b + std::sqrt(b * b - c);
    };
    Point q = p + d * std::min(reach(o1, R1), reach(o2, R2));
    // full cone angle of each disk seen from q; the slant line is one edge of both cones
    double a1 = 2 * std::asin(1 / dist(q, c1)), a2 = 2 * std::asin(r / dist(q, c2));
    return 360 - cpart::deg(a1 + a2);
}

}  // namespace support
