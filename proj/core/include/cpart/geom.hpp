#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpart {

inline constexpr double tau_pt = 1e-9;
inline constexpr double tau_area = 1e-9;
inline constexpr double tau_angle = 1e-7;   // degrees
inline constexpr double tau_cover = 1e-7;

inline constexpr double pi = 3.14159265358979323846;

// numeric or construction failure (cli exit code 3)
struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double rad(double deg) { return deg * pi / 180.0; }
inline double deg(double r) { return r * 180.0 / pi; }

struct Point {
    double x = 0, y = 0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
inline Point operator*(double s, Point a) { return {a.x * s, a.y * s}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point unit(Point a) { return a * (1.0 / norm(a)); }
inline Point lerp(Point a, Point b, double t) { return a + (b - a) * t; }
inline Point dir_deg(double d) { return {std::cos(rad(d)), std::sin(rad(d))}; }
inline Point rotate(Point p, double deg_ccw, Point about = {})
{
    double c = std::cos(rad(deg_ccw)), s = std::sin(rad(deg_ccw));
    Point d = p - about;
    return about + Point{c * d.x - s * d.y, s * d.x + c * d.y};
}

// twice the signed area of pqr, > 0 for counterclockwise
double orientation(Point p, Point q, Point r);

double signed_area(const std::vector<Point>& v);

// Vertex list in counterclockwise order. Clockwise input is reversed.
// Convexity is not enforced here; validate() reports it.
class ConvexPolygon {
public:
    ConvexPolygon() = default;
    explicit ConvexPolygon(std::vector<Point> v);
    ConvexPolygon(std::initializer_list<Point> v) : ConvexPolygon(std::vector<Point>(v)) {}

    std::size_t size() const { return v_.size(); }
    const Point& operator[](std::size_t i) const { return v_[i % v_.size()]; }
    const std::vector<Point>& vertices() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }

private:
    std::vector<Point> v_;
};

double interior_angle(const ConvexPolygon& poly, std::size_t i);
double polygon_area(const ConvexPolygon& poly);
Point centroid(const std::vector<Point>& v);

// keep the part with dot(n, p) <= c
std::vector<Point> clip_halfplane(const std::vector<Point>& v, Point n, double c);
std::vector<Point> clip_convex(const std::vector<Point>& subject, const ConvexPolygon& clip);
double intersection_area(const ConvexPolygon& p1, const ConvexPolygon& p2);

// drops consecutive duplicates closer than tol
std::vector<Point> dedupe(const std::vector<Point>& v, double tol = tau_pt);
bool is_convex(const ConvexPolygon& poly);
bool has_collinear_vertex(const ConvexPolygon& poly);
bool contains(const ConvexPolygon& poly, Point p, double tol = tau_pt);

ConvexPolygon regular_polygon(int k, double circumradius = 1.0, double phase_deg = 90.0);

// intersection of lines p + s u and q + t v
Point line_intersection(Point p, Point u, Point q, Point v);
// orthogonal projection of p onto the line through a, b
Point foot(Point p, Point a, Point b);
double line_distance(Point p, Point a, Point b);

}  // namespace cpart
