#include "cpart/circles.hpp"

#include <algorithm>
#include <random>

namespace cpart {

namespace {

bool covers(const Circle& c, Point p) { return dist(c.center, p) <= c.radius * (1 + 1e-14) + 1e-14; }

Circle diametral(Point a, Point b) { return {lerp(a, b, 0.5), dist(a, b) / 2}; }

}  // namespace

Circle circle_through(Point a, Point b, Point c)
{
    double d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    if (std::abs(d) < 1e-300) {
        // collinear, widest pair
        Circle best = diametral(a, b);
        for (auto cand : {diametral(a, c), diametral(b, c)})
            if (cand.radius > best.radius)
                best = cand;
        return best;
    }
    double a2 = dot(a, a), b2 = dot(b, b), c2 = dot(c, c);
    Point o{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
            (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
    return {o, std::max({dist(o, a), dist(o, b), dist(o, c)})};
}

Circle min_enclosing_circle(const std::vector<Point>& points, std::uint64_t seed)
{
    if (points.empty())
        throw std::invalid_argument("min_enclosing_circle: empty point set");
    std::vector<Point> p = points;
    std::mt19937_64 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);

    Circle c{p[0], 0};
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (covers(c, p[i]))
            continue;
        c = {p[i], 0};
        for (std::size_t j = 0; j < i; ++j) {
            if (covers(c, p[j]))
                continue;
            c = diametral(p[i], p[j]);
            for (std::size_t k = 0; k < j; ++k)
                if (!covers(c, p[k]))
                    c = circle_through(p[i], p[j], p[k]);
        }
    }
    return c;
}

Circle min_enclosing_circle_brute(const std::vector<Point>& points)
{
    if (points.empty())
        throw std::invalid_argument("min_enclosing_circle_brute: empty point set");
    std::size_t n = points.size();
    if (n == 1)
        return {points[0], 0};
    auto encloses = [&](const Circle& c) {
        for (auto& q : points)
            if (dist(c.center, q) > c.radius * (1 + 1e-12) + 1e-12)
                return false;
        return true;
    };
    Circle best{{}, INFINITY};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Circle c = diametral(points[i], points[j]);
            if (c.radius < best.radius && encloses(c))
                best = c;
            for (std::size_t k = j + 1; k < n; ++k) {
                Circle t = circle_through(points[i], points[j], points[k]);
                if (t.radius < best.radius && encloses(t))
                    best = t;
            }
        }
    return best;
}

Disk max_inscribed_disk(const ConvexPolygon& poly)
{
    const auto& v = poly.vertices();
    double area = signed_area(v);
    double scale = 0;
    for (auto& p : v)
        scale = std::max(scale, dist(p, v[0]));
    if (area < tau_area * std::max(1.0, scale * scale) || scale == 0)
        throw std::invalid_argument("max_inscribed_disk: degenerate polygon");

    struct HalfPlane {
        Point n;    // outward unit normal
        double c;   // dot(n, p) <= c inside
    };
    std::vector<HalfPlane> hp;
    for (std::size_t i = 0, n = v.size(); i < n; ++i) {
        Point e = v[(i + 1) % n] - v[i];
        double l = norm(e);
        if (l < tau_pt * std::max(1.0, scale))
            continue;
        Point nr{e.y / l, -e.x / l};
        hp.push_back({nr, dot(nr, v[i])});
    }

    auto region = [&](double r) {
        std::vector<Point> R = v;
        for (auto& h : hp) {
            R = clip_halfplane(R, h.n, h.c - r);
            if (R.size() < 3)
                return std::vector<Point>{};
        }
        return R;
    };

    // the optimum of max r s.t. dot(n_i, c) + r <= c_i sits on a vertex of three constraints
    double tol = 1e-12 * std::max(1.0, scale);
    double r_best = -1;
    Point end_a{}, end_b{};   // optimal centres are a point or a segment; track its ends
    if (hp.size() <= 64) {
        for (std::size_t i = 0; i < hp.size(); ++i)
            for (std::size_t j = i + 1; j < hp.size(); ++j)
                for (std::size_t k = j + 1; k < hp.size(); ++k) {
                    const HalfPlane* h[3] = {&hp[i], &hp[j], &hp[k]};
                    // Cramer on rows (n.x, n.y, 1)
                    auto det3 = [&](int col, const double* rhs) {
                        double m[3][3];
                        for (int r = 0; r < 3; ++r) {
                            m[r][0] = h[r]->n.x;
                            m[r][1] = h[r]->n.y;
                            m[r][2] = 1;
                            if (col >= 0)
                                m[r][col] = rhs[r];
                        }
                        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
                    };
                    double rhs[3] = {h[0]->c, h[1]->c, h[2]->c};
                    double d = det3(-1, rhs);
                    if (std::abs(d) < 1e-12)
                        continue;
                    double r = det3(2, rhs) / d;
                    if (r < r_best - tol)
                        continue;
                    Point c{det3(0, rhs) / d, det3(1, rhs) / d};
                    bool ok = true;
                    for (auto& g : hp)
                        if (dot(g.n, c) + r > g.c + tol) {
                            ok = false;
                            break;
                        }
                    if (!ok)
                        continue;
                    if (r > r_best + tol) {
                        end_a = end_b = c;
                    } else if (dist(c, end_a) > dist(end_a, end_b)) {
                        end_b = c;
                    } else if (dist(c, end_b) > dist(end_a, end_b)) {
                        end_a = c;
                    }
                    r_best = std::max(r_best, r);
                }
    }
    if (r_best <= 0) {
        // many edges: bisection on the offset region; area >= r * perimeter / 2 bounds r
        double perim = 0;
        for (std::size_t i = 0, n = v.size(); i < n; ++i)
            perim += dist(v[i], v[(i + 1) % n]);
        double lo = 0, hi = 2 * area / perim * 1.0000001;
        std::vector<Point> best = v;
        for (int it = 0; it < 200 && hi - lo > 1e-16 * scale; ++it) {
            double mid = 0.5 * (lo + hi);
            auto R = region(mid);
            if (!R.empty() && signed_area(R) > 0) {
                lo = mid;
                best = std::move(R);
            } else {
                hi = mid;
            }
        }
        return {centroid(best), lo};
    }
    return {lerp(end_a, end_b, 0.5), r_best};
}

AspectReport aspect_ratio(const ConvexPolygon& poly)
{
    AspectReport rep;
    rep.circumcircle = min_enclosing_circle(poly.vertices());
    rep.indisk = max_inscribed_disk(poly);
    if (rep.indisk.radius <= 0)
        throw std::invalid_argument("aspect_ratio: zero inradius");
    rep.gamma = rep.circumcircle.radius / rep.indisk.radius;
    return rep;
}

}  // namespace cpart
