#include "cpart/constructions.hpp"
#include "cpart/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cpart {

namespace {

using Quad = std::vector<Point>;   // 4 points, counterclockwise

Point bisector_dir(const Quad& q, int k)
{
    Point p = q[k], a = unit(q[(k + 3) % 4] - p), b = unit(q[(k + 1) % 4] - p);
    return unit(a + b);
}

bool strictly_inside(const Quad& q, Point p)
{
    for (int i = 0; i < 4; ++i)
        if (cross(q[(i + 1) % 4] - q[i], p - q[i]) <= 1e-9)
            return false;
    return true;
}

double edge_param(const Quad& q, int k, Point p)
{
    Point a = q[k % 4], u = q[(k + 1) % 4] - a;
    return dot(p - a, u) / dot(u, u);
}

// Four pedal kites around the nodes n1 (corners j, j+1) and n2 (corners
// j+2, j+3) plus two strips between segment n1 n2 and edges j+1, j+3.
// Strip cells are cut perpendicular to the edge with geometric spacing so
// each cell is about kappa times as wide as it is tall.
std::vector<Quad> skeleton(const Quad& q, int j, Point n1, Point n2, double kappa)
{
    auto c = [&](int k) { return q[k % 4]; };
    auto F = [&](Point n, int k) { return foot(n, c(k), c(k + 1)); };
    std::vector<Quad> out{{c(j), F(n1, j), n1, F(n1, j + 3)},
                          {c(j + 1), F(n1, j + 1), n1, F(n1, j)},
                          {c(j + 2), F(n2, j + 2), n2, F(n2, j + 1)},
                          {c(j + 3), F(n2, j + 3), n2, F(n2, j + 2)}};
    for (auto [k, na, nb] : {std::tuple{j + 1, n1, n2}, std::tuple{j + 3, n2, n1}}) {
        Point fa = F(na, k), fb = F(nb, k);
        double L = dist(fa, fb);
        if (L < 1e-12)
            continue;
        double ha = line_distance(na, c(k), c(k + 1)), hb = line_distance(nb, c(k), c(k + 1));
        std::vector<double> s;
        if (std::abs(hb - ha) > 1e-9 * L) {
            int n = std::max(1L, std::lround(std::log(hb / ha) / ((hb - ha) / L) / kappa));
            double r = std::pow(hb / ha, 1.0 / n);
            for (int i = 0; i <= n; ++i)
                s.push_back((ha * std::pow(r, i) - ha) / (hb - ha));
        } else {
            int n = std::max(1L, std::lround(L / ha / kappa));
            for (int i = 0; i <= n; ++i)
                s.push_back(static_cast<double>(i) / n);
        }
        s.back() = 1.0;
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            out.push_back({lerp(fa, fb, s[i]), lerp(fa, fb, s[i + 1]), lerp(na, nb, s[i + 1]), lerp(na, nb, s[i])});
    }
    return out;
}

bool skeleton_ok(const Quad& q, int j, Point n1, Point n2)
{
    if (!strictly_inside(q, n1) || !strictly_inside(q, n2))
        return false;
    for (auto [k, na, nb] : {std::tuple{j + 1, n1, n2}, std::tuple{j + 3, n2, n1}}) {
        double ta = edge_param(q, k, na), tb = edge_param(q, k, nb);
        if (!(ta > 0 && ta <= tb + 1e-12 && tb < 1 + 1e-12))
            return false;
    }
    for (auto [k, n] : {std::pair{j, n1}, std::pair{j + 2, n2}}) {
        double t = edge_param(q, k, n);
        if (!(t > 0 && t < 1))
            return false;
    }
    return true;
}

double worst(const std::vector<Quad>& ps)
{
    double g = 0;
    for (auto& p : ps) {
        auto v = dedupe(p, 1e-12);
        if (v.size() < 3)
            continue;
        ConvexPolygon cp(v);
        if (!is_convex(cp))
            return infeasible_penalty;
        try {
            g = std::max(g, gamma_one(cp));
        } catch (const std::invalid_argument&) {
            return infeasible_penalty;
        }
    }
    return g;
}

std::vector<Quad> skeleton_search(const Quad& q, double cap)
{
    double d[4];
    for (int i = 0; i < 4; ++i) {
        double ai = rad(interior_angle(ConvexPolygon(q), i)), aj = rad(interior_angle(ConvexPolygon(q), (i + 1) % 4));
        d[i] = dist(q[i], q[(i + 1) % 4]) / (1 / std::tan(ai / 2) + 1 / std::tan(aj / 2));
    }
    // edge whose inward offset vanishes first
    int j = static_cast<int>(std::min_element(d, d + 4) - d);
    auto c = [&](int k) { return q[k % 4]; };
    Point n1 = line_intersection(c(j), bisector_dir(q, j % 4), c(j + 1), bisector_dir(q, (j + 1) % 4));
    Point n2 = line_intersection(c(j + 2), bisector_dir(q, (j + 2) % 4), c(j + 3), bisector_dir(q, (j + 3) % 4));

    double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
    for (auto& p : q) {
        x0 = std::min(x0, p.x);
        y0 = std::min(y0, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }

    std::vector<Quad> best;
    double best_g = INFINITY;
    for (double kappa : {1.0, 1.1, 1.2}) {
        auto eval = [&](const std::vector<double>& x) {
            Point a{x[0], x[1]}, b{x[2], x[3]};
            if (!skeleton_ok(q, j, a, b))
                return infeasible_penalty;
            return worst(skeleton(q, j, a, b, kappa));
        };
        Objective obj{eval, {{x0, x1}, {y0, y1}, {x0, x1}, {y0, y1}}};
        Point mid = lerp(n1, n2, 0.5);
        for (auto [s1, s2] : {std::pair{n1, n2}, std::pair{mid, mid}}) {
            std::vector<double> x{s1.x, s1.y, s2.x, s2.y};
            for (std::size_t i = 0; i < 4; ++i)
                x[i] = std::clamp(x[i], obj.bounds[i].first, obj.bounds[i].second);
            double g0 = eval(x);
            if (g0 > cap) {
                MinimizeOptions o;
                o.restarts = 0;
                o.xtol = 1e-9 * std::max(x1 - x0, y1 - y0);
                auto r = minimize(obj, x, 0, 600, o);
                x = r.best_params;
                g0 = r.best_gamma;
            }
            if (g0 < best_g) {
                best_g = g0;
                best = skeleton(q, j, {x[0], x[1]}, {x[2], x[3]}, kappa);
            }
        }
        if (best_g <= cap)
            break;
    }
    return best;
}

std::vector<Quad> quad80_rec(const Quad& q, double cap, int depth)
{
    if (gamma_one(ConvexPolygon(q)) <= cap)
        return {q};
    auto sk = skeleton_search(q, cap);
    double g = worst(sk);
    if (g <= cap || depth >= 3)
        return sk;
    auto best = sk;
    double best_g = g;
    Point cen = (q[0] + q[1] + q[2] + q[3]) * 0.25;
    for (int e = 0; e < 4; ++e) {
        // halve with a cut perpendicular to edge e through the vertex centroid
        Point u = unit(q[(e + 1) % 4] - q[e]);
        Quad h1 = dedupe(clip_halfplane(q, u, dot(cen, u)), 1e-12);
        Quad h2 = dedupe(clip_halfplane(q, u * -1.0, -dot(cen, u)), 1e-12);
        if (h1.size() != 4 || h2.size() != 4 || !is_80quad(ConvexPolygon(h1)) || !is_80quad(ConvexPolygon(h2)))
            continue;
        auto r = quad80_rec(ConvexPolygon(h1).vertices(), cap, depth + 1);
        auto r2 = quad80_rec(ConvexPolygon(h2).vertices(), cap, depth + 1);
        r.insert(r.end(), r2.begin(), r2.end());
        double gr = worst(r);
        if (gr <= cap)
            return r;
        if (gr < best_g) {
            best_g = gr;
            best = r;
        }
    }
    return best;
}

}  // namespace

bool is_80quad(const ConvexPolygon& q)
{
    if (q.size() != 4 || !is_convex(q))
        return false;
    for (std::size_t i = 0; i < 4; ++i) {
        double a = interior_angle(q, i);
        if (a < quad80_lo - tau_angle || a > quad80_hi + tau_angle)
            return false;
    }
    return true;
}

Partition partition_80quad(const ConvexPolygon& q, double gamma_cap)
{
    if (!is_80quad(q)) {
        std::ostringstream os;
        os << "partition_80quad: corner angles outside 90 +- 11:";
        if (q.size() == 4)
            for (std::size_t i = 0; i < 4; ++i)
                os << ' ' << interior_angle(q, i);
        throw std::invalid_argument(os.str());
    }
    auto cells = quad80_rec(q.vertices(), gamma_cap, 0);
    Partition p;
    p.host = q;
    for (auto& c : cells) {
        auto v = dedupe(c, 1e-12);
        if (v.size() >= 3)
            p.pieces.emplace_back(v);
    }
    for (auto& c : p.pieces) {
        double g = is_convex(c) ? gamma_one(c) : INFINITY;
        if (g > gamma_cap) {
            std::ostringstream os;
            os << "partition_80quad: cell above cap " << gamma_cap << " (" << g << "):";
            for (auto& v : c)
                os << " (" << v.x << ", " << v.y << ")";
            throw SolverError(os.str());
        }
    }
    p.metadata["design"] = "quad80";
    return p;
}

std::vector<ConvexPolygon> partition_curve_strip(const CurvePair& c, double gamma_cap)
{
    if (c.n < 1)
        throw std::invalid_argument("partition_curve_strip: n < 1");
    std::vector<ConvexPolygon> out;
    for (int i = 0; i < c.n; ++i) {
        double t0 = static_cast<double>(i) / c.n, t1 = static_cast<double>(i + 1) / c.n;
        ConvexPolygon q{c.A(t0), c.B(t0), c.B(t1), c.A(t1)};
        if (!is_80quad(q))
            throw std::invalid_argument("partition_curve_strip: quad " + std::to_string(i) + " outside the 80 degree range");
        if (gamma_one(q) <= gamma_cap) {
            out.push_back(q);
            continue;
        }
        auto sub = partition_80quad(q, gamma_cap);
        out.insert(out.end(), sub.pieces.begin(), sub.pieces.end());
    }
    return out;
}

}  // namespace cpart
