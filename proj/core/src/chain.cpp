#include "cpart/constructions.hpp"

#include <cmath>
#include <sstream>

namespace cpart {

namespace {

const Point disk_center{0, 1};

struct Feet {
    double b, c;
};

Feet feet(double theta, double theta_next)
{
    return {-1 / std::tan(rad(theta) / 2), std::tan(rad(theta_next) / 2)};
}

// centre height of the circle through both feet that just encloses the disk
double enclosing_height(Feet f)
{
    double m = (f.b + f.c) / 2, hh = (f.c - f.b) / 2;
    auto slack = [&](double y) { return std::hypot(hh, y) - std::hypot(m, y - 1) - 1; };
    if (slack(0) >= 0)
        return 0;
    double lo = 0, hi = 1;
    while (slack(hi) < 0) {
        hi *= 2;
        if (hi > 1e8)
            throw SolverError("chain: no circle through the feet encloses the indisk");
    }
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (slack(mid) < 0 ? lo : hi) = mid;
    }
    return hi;
}

// second intersection of p + t u (t > 0) with the circle
Point exit_point(Point p, Point u, Point o, double R)
{
    Point f = p - o;
    double bq = dot(f, u), cq = dot(f, f) - R * R;
    return p + u * (-bq + std::sqrt(std::max(0.0, bq * bq - cq)));
}

// piece with feet b, c and side slants theta, theta_next; vertices on a circle of radius R
std::vector<Point> chain_piece(double theta, double theta_next, double R)
{
    Feet f = feet(theta, theta_next);
    double m = (f.b + f.c) / 2, hh = (f.c - f.b) / 2;
    Point o{m, std::sqrt(std::max(0.0, R * R - hh * hh))};
    Point B{f.b, 0}, C{f.c, 0};
    Point xr = exit_point(C, dir_deg(theta_next), o, R), xl = exit_point(B, dir_deg(theta), o, R);
    double ar = std::atan2(xr.y - o.y, xr.x - o.x), al = std::atan2(xl.y - o.y, xl.x - o.x);
    if (al < ar)
        al += 2 * pi;
    auto at = [&](double a) { return o + Point{std::cos(a), std::sin(a)} * R; };
    auto clear = [&](double a1, double a2) {
        Point p = at(a1), q = at(a2);
        return cross(q - p, disk_center - p) / dist(p, q) >= 1;
    };
    std::vector<Point> v{B, C, xr};
    double cur = ar;
    for (int n = 0; n < 10000; ++n) {
        if (clear(cur, al)) {
            v.push_back(xl);
            return dedupe(v, 1e-12);
        }
        double lo = cur, hi = al;
        for (int i = 0; i < 80; ++i) {
            double mid = 0.5 * (lo + hi);
            (clear(cur, mid) ? lo : hi) = mid;
        }
        if (lo - cur < 1e-12)
            throw SolverError("chain: circumcircle touches the indisk");
        cur = lo;
        v.push_back(at(cur));
    }
    throw SolverError("chain: too many vertices");
}

}  // namespace

double chain_min_radius(double theta, double theta_next)
{
    Feet f = feet(theta, theta_next);
    double y = enclosing_height(f);
    return std::hypot((f.c - f.b) / 2, y);
}

BoundaryChain boundary_chain(double gamma, double theta0)
{
    if (!(gamma > 1.28868))
        throw std::invalid_argument("boundary_chain: gamma at or below the square lower bound 1.28868");
    // the circle is solved a hair inside gamma so the chord polygon stays finite
    const double target = gamma * (1 - 1e-4), R = gamma * (1 - 5e-5);

    BoundaryChain ch;
    ch.angles.push_back(theta0);
    double th = theta0 == 90.0 ? 2 * deg(std::atan(std::sqrt(2.0) * gamma - 1)) : theta0;
    ch.angles.push_back(th);
    double x = theta0 == 90.0 ? 1 + std::tan(rad(th) / 2) : 0.0;   // left foot of the next piece

    for (int guard = 0; guard < 64; ++guard) {
        double next;
        if (chain_min_radius(th, 90) <= target) {
            next = 90;
        } else {
            if (chain_min_radius(th, th) > target) {
                std::ostringstream os;
                os << "boundary_chain: no next piece after " << th << " degrees";
                throw SolverError(os.str());
            }
            double lo = th, hi = 90;
            for (int i = 0; i < 200; ++i) {
                double mid = 0.5 * (lo + hi);
                (chain_min_radius(th, mid) <= target ? lo : hi) = mid;
            }
            next = lo;
        }
        auto v = chain_piece(th, next, R);
        Feet f = feet(th, next);
        for (auto& p : v)
            p.x += x - f.b;
        x += f.c - f.b;
        ConvexPolygon piece(v);
        ch.piece_gamma.push_back(gamma_one(piece));
        ch.pieces.push_back(std::move(piece));
        ch.angles.push_back(next);
        if (next == 90)
            return ch;
        th = next;
    }
    throw SolverError("boundary_chain: chain does not straighten");
}

}  // namespace cpart
