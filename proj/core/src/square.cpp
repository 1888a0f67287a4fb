#include "cpart/constructions.hpp"
#include "cpart/optimize.hpp"

#include <cmath>

namespace cpart {

namespace {

// D4 acting on [-1,1]^2
Point rot90(Point p, int k)
{
    for (int i = 0; i < k; ++i)
        p = {-p.y, p.x};
    return p;
}
Point flip_x(Point p) { return {p.x, -p.y}; }   // across the horizontal axis
Point flip_d(Point p) { return {p.y, p.x}; }    // across the diagonal

std::vector<Point> map(const std::vector<Point>& v, Point (*f)(Point))
{
    std::vector<Point> out;
    for (auto& p : v)
        out.push_back(f(p));
    return out;
}

std::vector<Point> rotated(const std::vector<Point>& v, int k)
{
    std::vector<Point> out;
    for (auto& p : v)
        out.push_back(rot90(p, k));
    return out;
}

// twelve: corner pentagon, side pentagon, central pentagon (one quadrant of the octagon)
// free = {f, a, L}; side foot F = (1, f), inner vertices (a, t), (t, a), axis vertex (L, 0),
// t = f - (1 - a) cot(theta) so the side piece has angle theta at F
std::vector<std::vector<Point>> twelve_orbits(double theta, const std::vector<double>& x)
{
    double f = x[0], a = x[1], L = x[2];
    double t = f - (1 - a) / std::tan(rad(theta));
    std::vector<Point> corner{{1, f}, {1, 1}, {f, 1}, {t, a}, {a, t}};
    std::vector<Point> side{{1, -f}, {1, f}, {a, t}, {L, 0}, {a, -t}};
    std::vector<Point> central{{0, 0}, {L, 0}, {a, t}, {t, a}, {0, L}};
    return {corner, side, central};
}

// twentyone: corner C, side S (8 copies), axis A, diagonal D, central octagon
// free = {f, s, kx, ky, q, px, py}; F = (1, f), J = F + s (-sin theta, -cos theta),
// K = (kx, ky), Q = (q, 0), P = (px, py)
struct TwentyOne {
    std::vector<Point> C, S, A, D, center;
};

TwentyOne twentyone_pieces(double theta, const std::vector<double>& x)
{
    double th = rad(theta);
    Point F{1, x[0]};
    Point J = F + Point{-std::sin(th), -std::cos(th)} * x[1];
    Point K{x[2], x[3]}, Q{x[4], 0}, P{x[5], x[6]};
    TwentyOne t;
    t.C = {F, {1, 1}, flip_d(F), flip_d(J), J};
    t.S = {{1, 0}, F, J, K, Q};
    t.A = {Q, K, P, flip_x(P), flip_x(K)};
    t.D = {K, J, flip_d(J), flip_d(K), flip_d(P), P};
    for (int k = 0; k < 4; ++k) {
        t.center.push_back(rot90(P, k));
        t.center.push_back(rot90(flip_d(P), k));
    }
    return t;
}

std::vector<std::vector<Point>> design_pieces(const SquareDesignParams& p)
{
    std::vector<std::vector<Point>> out;
    if (p.design == SquareDesign::twelve) {
        if (p.free.size() != 3)
            throw std::invalid_argument("square_design twelve: expected 3 free parameters");
        for (auto& o : twelve_orbits(p.theta, p.free))
            for (int k = 0; k < 4; ++k)
                out.push_back(rotated(o, k));
    } else {
        if (p.free.size() != 7)
            throw std::invalid_argument("square_design twentyone: expected 7 free parameters");
        auto t = twentyone_pieces(p.theta, p.free);
        for (int k = 0; k < 4; ++k) {
            out.push_back(rotated(t.C, k));
            out.push_back(rotated(t.S, k));
            out.push_back(rotated(map(t.S, flip_x), k));
            out.push_back(rotated(t.A, k));
            out.push_back(rotated(t.D, k));
        }
        out.push_back(t.center);
    }
    return out;
}

bool pieces_ok(const std::vector<std::vector<Point>>& ps, double& worst, bool want_gamma)
{
    worst = 0;
    for (auto& v : ps) {
        for (auto& q : v)
            if (!(std::abs(q.x) <= 1 + 1e-12 && std::abs(q.y) <= 1 + 1e-12))
                return false;
        auto d = dedupe(v, 1e-12);
        if (d.size() < 3 || std::abs(signed_area(d)) <= 0)
            return false;
        ConvexPolygon c(d);
        if (!is_convex(c))
            return false;
        if (want_gamma)
            worst = std::max(worst, gamma_one(c));
    }
    return true;
}

}  // namespace

std::vector<std::string> square_design_free_names(SquareDesign d)
{
    if (d == SquareDesign::twelve)
        return {"f", "a", "L"};
    return {"f", "s", "kx", "ky", "q", "px", "py"};
}

SquareDesignParams square_design_start(SquareDesign d)
{
    if (d == SquareDesign::twelve)
        return {d, 89.62, {0.35, 0.55, 0.35}};
    return {d, 99.46, {0.45, 0.30414, 0.55, 0.2, 0.6, 0.28, 0.116}};
}

SquareDesignParams square_design_tuned(SquareDesign d)
{
    if (d == SquareDesign::twelve)
        return {d, 83.6266, {0.32181, 0.50923, 0.40185}};
    return {d, 82.1534, {0.48348, 0.41123, 0.53318, 0.18519, 0.65151, 0.30984, 0.14170}};
}

std::vector<double> square_design_vector(const SquareDesignParams& p)
{
    std::vector<double> x{p.theta};
    x.insert(x.end(), p.free.begin(), p.free.end());
    return x;
}

SquareDesignParams square_design_from_vector(SquareDesign d, const std::vector<double>& x)
{
    return {d, x.at(0), std::vector<double>(x.begin() + 1, x.end())};
}

std::vector<std::pair<double, double>> square_design_bounds(SquareDesign d)
{
    if (d == SquareDesign::twelve)
        return {{70, 90}, {0.02, 0.98}, {0.02, 0.98}, {0.02, 0.98}};
    return {{70, 110}, {0.02, 0.98}, {0.02, 0.98}, {0.02, 0.98}, {0.02, 0.98}, {0.02, 0.98}, {0.02, 0.98},
            {0.0, 0.98}};
}

double square_design_objective(SquareDesign d, const std::vector<double>& x)
{
    std::vector<std::vector<Point>> ps;
    auto p = square_design_from_vector(d, x);
    // one representative per orbit is enough for the ratio
    if (d == SquareDesign::twelve) {
        ps = twelve_orbits(p.theta, p.free);
    } else {
        auto t = twentyone_pieces(p.theta, p.free);
        ps = {t.C, t.S, t.A, t.D, t.center};
    }
    double g;
    if (!pieces_ok(ps, g, true))
        return infeasible_penalty;
    return g;
}

Partition square_design(const SquareDesignParams& p)
{
    auto ps = design_pieces(p);
    double g;
    if (!pieces_ok(ps, g, false))
        throw std::invalid_argument("square_design: parameters give a self-intersecting or non-convex piece");
    Partition out;
    out.host = ConvexPolygon{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    for (auto& v : ps) {
        std::vector<Point> w;
        for (auto& q : dedupe(v, 1e-12))
            w.push_back({(q.x + 1) / 2, (q.y + 1) / 2});
        out.pieces.emplace_back(w);
    }
    out.metadata["design"] = p.design == SquareDesign::twelve ? "twelve" : "twentyone";
    out.metadata["theta_deg"] = std::to_string(p.theta);
    std::string fr;
    for (std::size_t i = 0; i < p.free.size(); ++i)
        fr += (i ? "," : "") + std::to_string(p.free[i]);
    out.metadata["free"] = fr;
    return out;
}

SquareOptimization optimize_square_design(SquareDesign d, std::uint64_t seed, std::size_t budget)
{
    Objective obj{[d](const std::vector<double>& x) { return square_design_objective(d, x); }, square_design_bounds(d)};
    auto r = minimize(obj, square_design_vector(square_design_start(d)), seed, budget);
    return {square_design_from_vector(d, r.best_params), r};
}

}  // namespace cpart
