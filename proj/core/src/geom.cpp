#include "cpart/geom.hpp"

#include <algorithm>

namespace cpart {

double orientation(Point p, Point q, Point r) { return cross(q - p, r - p); }

double signed_area(const std::vector<Point>& v)
{
    double s = 0;
    for (std::size_t i = 0, n = v.size(); i < n; ++i)
        s += cross(v[i], v[(i + 1) % n]);
    return 0.5 * s;
}

ConvexPolygon::ConvexPolygon(std::vector<Point> v) : v_(std::move(v))
{
    if (v_.size() < 3)
        throw std::invalid_argument("polygon needs at least 3 vertices, got " + std::to_string(v_.size()));
    for (auto& p : v_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("non-finite polygon vertex");
    if (signed_area(v_) < 0)
        std::reverse(v_.begin(), v_.end());
}

double interior_angle(const ConvexPolygon& poly, std::size_t i)
{
    std::size_t n = poly.size();
    if (i >= n)
        throw std::out_of_range("vertex index out of range");
    Point p = poly[i], a = poly[i + n - 1] - p, b = poly[i + 1] - p;
    if (norm(a) < tau_pt || norm(b) < tau_pt)
        throw std::invalid_argument("degenerate edge at vertex " + std::to_string(i));
    // turn from b to a, counterclockwise polygon keeps the interior on the left
    double ang = std::atan2(cross(b, a), dot(b, a));
    if (ang < 0)
        ang += 2 * pi;
    return deg(ang);
}

double polygon_area(const ConvexPolygon& poly) { return std::abs(signed_area(poly.vertices())); }

Point centroid(const std::vector<Point>& v)
{
    double a = 0, cx = 0, cy = 0;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        const Point &p = v[i], &q = v[(i + 1) % n];
        double c = cross(p, q);
        a += c;
        cx += (p.x + q.x) * c;
        cy += (p.y + q.y) * c;
    }
    if (std::abs(a) < 1e-300) {
        Point s;
        for (auto& p : v)
            s = s + p;
        return s * (1.0 / static_cast<double>(v.size()));
    }
    return {cx / (3 * a), cy / (3 * a)};
}

std::vector<Point> clip_halfplane(const std::vector<Point>& v, Point n, double c)
{
    std::vector<Point> out;
    std::size_t m = v.size();
    out.reserve(m + 1);
    for (std::size_t i = 0; i < m; ++i) {
        Point a = v[i], b = v[(i + 1) % m];
        double da = dot(a, n) - c, db = dot(b, n) - c;
        if (da <= 0)
            out.push_back(a);
        if ((da < 0 && db > 0) || (da > 0 && db < 0))
            out.push_back(lerp(a, b, da / (da - db)));
    }
    return out;
}

std::vector<Point> clip_convex(const std::vector<Point>& subject, const ConvexPolygon& clip)
{
    std::vector<Point> out = subject;
    std::size_t n = clip.size();
    for (std::size_t i = 0; i < n && out.size() >= 3; ++i) {
        Point a = clip[i], e = clip[i + 1] - a;
        // outward normal of a ccw edge
        Point nr{e.y, -e.x};
        out = clip_halfplane(out, nr, dot(nr, a));
    }
    if (out.size() < 3)
        out.clear();
    return out;
}

double intersection_area(const ConvexPolygon& p1, const ConvexPolygon& p2)
{
    auto v = clip_convex(p1.vertices(), p2);
    return v.empty() ? 0.0 : std::max(0.0, signed_area(v));
}

std::vector<Point> dedupe(const std::vector<Point>& v, double tol)
{
    std::vector<Point> out;
    for (auto& p : v)
        if (out.empty() || dist(p, out.back()) > tol)
            out.push_back(p);
    while (out.size() > 1 && dist(out.front(), out.back()) <= tol)
        out.pop_back();
    return out;
}

bool is_convex(const ConvexPolygon& poly)
{
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point e1 = poly[i + 1] - poly[i], e2 = poly[i + 2] - poly[i + 1];
        double l1 = norm(e1), l2 = norm(e2);
        if (l1 < tau_pt || l2 < tau_pt)
            return false;
        if (cross(e1, e2) < -tau_area * l1 * l2)
            return false;
    }
    return signed_area(poly.vertices()) > 0;
}

bool has_collinear_vertex(const ConvexPolygon& poly)
{
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point e1 = poly[i + 1] - poly[i], e2 = poly[i + 2] - poly[i + 1];
        if (std::abs(cross(e1, e2)) <= tau_area * norm(e1) * norm(e2))
            return true;
    }
    return false;
}

bool contains(const ConvexPolygon& poly, Point p, double tol)
{
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        Point a = poly[i], e = poly[i + 1] - a;
        double l = norm(e);
        if (l == 0)
            continue;
        if (cross(e, p - a) / l < -tol)
            return false;
    }
    return true;
}

ConvexPolygon regular_polygon(int k, double circumradius, double phase_deg)
{
    if (k < 3)
        throw std::invalid_argument("regular polygon needs k >= 3");
    std::vector<Point> v;
    for (int i = 0; i < k; ++i)
        v.push_back(dir_deg(phase_deg + 360.0 * i / k) * circumradius);
    return ConvexPolygon(v);
}

Point line_intersection(Point p, Point u, Point q, Point v)
{
    double d = cross(u, v);
    if (std::abs(d) < 1e-300)
        throw SolverError("parallel lines");
    return p + u * (cross(q - p, v) / d);
}

Point foot(Point p, Point a, Point b)
{
    Point u = b - a;
    return a + u * (dot(p - a, u) / dot(u, u));
}

double line_distance(Point p, Point a, Point b) { return std::abs(cross(b - a, p - a)) / dist(a, b); }

}  // namespace cpart
