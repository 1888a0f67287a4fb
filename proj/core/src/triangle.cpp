#include "cpart/constructions.hpp"
#include "cpart/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cpart {

namespace {

const double sqrt3 = std::sqrt(3.0);
const Point corner_center{sqrt3, 1.0};   // unit indisk in the 60 degree corner at the origin

// x = {sigma, offsets...}: edge normals seen from the indisk centre are
// -90 (bottom side), -sigma, the E fan symmetric about 30, 60+sigma, 150.
std::vector<Point> corner_vertices(int m, const std::vector<double>& x)
{
    int k = m - 4;
    double sigma = x[0];
    std::vector<double> E;
    for (int i = 0; i < k / 2; ++i) {
        E.push_back(30 - x[1 + i]);
        E.push_back(30 + x[1 + i]);
    }
    if (k % 2)
        E.push_back(30);
    std::sort(E.begin(), E.end());
    std::vector<double> nr{-90, -sigma};
    nr.insert(nr.end(), E.begin(), E.end());
    nr.push_back(60 + sigma);
    nr.push_back(150);

    std::vector<Point> v{{0, 0}};
    for (std::size_t i = 0; i + 1 < nr.size(); ++i) {
        double a = nr[i], b = nr[i + 1];
        if (b <= a)
            return {};
        v.push_back(corner_center + dir_deg((a + b) / 2) * (1 / std::cos(rad((b - a) / 2))));
    }
    return v;
}

struct TriLayout {
    int m;
    std::vector<double> corner;   // sigma, offsets
    double a, b;                  // wall abscissa and hexagon base height, indisk units
    double t1, t2;                // cut positions of the side region
    double corner_gamma, side_gamma;
};

// tuned per corner vertex count; side_gamma is the larger of the two side cut pieces
const TriLayout layouts[] = {
    {5, {8.1}, 3.7187586823554684, 1.7531669401497048, 0.4077153603825316, 0.4853673460330001, 1.51987, 1.54289},
    {6, {8.1, 9.7}, 4.022535774162655, 1.638689663050413, 0.410187877159784, 0.48644311634803156, 1.50730, 1.50058},
    {7, {8.07734954, 9.6969616}, 3.676619012758101, 1.5325667593145056, 0.41337856888771146, 0.5067426590110895,
     1.50120, 1.48745},
    {8, {8.17519646, 10.47408746, 2.09818248}, 3.601914043651324, 1.5290141837379676, 0.41817394270757313,
     0.5061340246944154, 1.50034, 1.48122},
};

Point reflect30(Point p) { return {p.x * 0.5 + p.y * sqrt3 / 2, p.x * sqrt3 / 2 - p.y * 0.5}; }

ConvexPolygon poly(std::vector<Point> v, const char* stage)
{
    v = dedupe(v, 1e-12);
    if (v.size() < 3)
        throw SolverError(std::string("equilateral_partition: degenerate piece at ") + stage);
    ConvexPolygon p(v);
    if (!is_convex(p))
        throw SolverError(std::string("equilateral_partition: non-convex piece at ") + stage);
    return p;
}

// axis-aligned box [x0,x1] x [y0,y1] into near-square cells
std::vector<ConvexPolygon> box_cells(double x0, double x1, double y0, double y1, double eps)
{
    double w = x1 - x0, h = y1 - y0;
    if (w >= h)
        return rectangle_cells({x0, y0}, {1, 0}, h, w, eps);
    return rectangle_cells({x1, y0}, {0, 1}, w, h, eps);
}

void add_quad80(std::vector<ConvexPolygon>& out, const ConvexPolygon& q, double cap, const char* stage)
{
    if (!is_80quad(q))
        throw SolverError(std::string("equilateral_partition: angle range failure at ") + stage);
    if (gamma_one(q) <= cap) {
        out.push_back(q);
        return;
    }
    auto sub = partition_80quad(q, cap);
    out.insert(out.end(), sub.pieces.begin(), sub.pieces.end());
}

}  // namespace

double corner_piece_60_min_gamma(int m)
{
    return gamma_one(corner_piece_60(m, 1.0));
}

ConvexPolygon corner_piece_60(int m, double slack)
{
    if (m < 5)
        throw std::invalid_argument("corner_piece_60: m < 5");
    if (!(slack > 0))
        throw std::invalid_argument("corner_piece_60: slack must be positive");
    int nhalf = (m - 4) / 2;
    std::vector<double> x0{8.1};
    std::vector<std::pair<double, double>> box{{7.0, 11.0}};
    for (auto& L : layouts)
        if (L.m == m)
            x0 = L.corner;
    for (int i = static_cast<int>(x0.size()) - 1; i < nhalf; ++i)
        x0.push_back(11.0 * (nhalf - i) / (nhalf + 1));
    for (int i = 0; i < nhalf; ++i)
        box.emplace_back(0.0, 11.0);
    auto f = [&](const std::vector<double>& x) {
        auto v = corner_vertices(m, x);
        if (v.empty())
            return infeasible_penalty;
        ConvexPolygon p(v);
        return is_convex(p) ? gamma_one(p) : infeasible_penalty;
    };
    auto r = minimize({f, box}, x0, 0, 400 * (nhalf + 1));
    double cap = 1.5 * (1 + slack);
    if (r.best_gamma > cap) {
        std::ostringstream os;
        os << "corner_piece_60: m = " << m << " reaches " << r.best_gamma << ", above " << cap;
        throw SolverError(os.str());
    }
    return ConvexPolygon(corner_vertices(m, r.best_params));
}

Partition equilateral_partition(double gamma_target)
{
    if (!(gamma_target > 1.5))
        throw std::invalid_argument("equilateral_partition: gamma_target must exceed 1.5");
    const TriLayout* L = nullptr;
    for (auto& c : layouts)
        if (std::max(c.corner_gamma, c.side_gamma) <= gamma_target) {
            L = &c;
            break;
        }
    if (!L) {
        std::ostringstream os;
        os << "equilateral_partition: no tabulated corner piece reaches " << gamma_target;
        throw SolverError(os.str());
    }
    const double cap = std::min(gamma_target, 1.5);
    const double eps = 0.1;   // rectangle cells, ratio <= 1.1 keeps gamma below 1.487

    auto C = corner_vertices(L->m, L->corner);
    const double a = L->a, b = L->b;
    const double h = a - sqrt3 * b;   // hexagon side
    const double s = 2 * sqrt3 * b + 3 * h;   // triangle side
    if (h <= 0)
        throw SolverError("equilateral_partition: empty hexagon");
    const Point G{s / 2, s / (2 * sqrt3)};
    const Point H240{a, b}, H180 = reflect30(H240);
    const Point n30 = dir_deg(30);
    auto hexhit = [&](Point p) {
        Point d = unit(p - corner_center);
        double t = (dot(H240, n30) - dot(corner_center, n30)) / dot(d, n30);
        return corner_center + d * t;
    };

    Point S1 = C[1], V1 = C[2], V1r = C[C.size() - 2];
    std::vector<Point> E(C.begin() + 3, C.end() - 2);
    Point Z1{a, V1.y};

    // zone around corner A, lower half first
    std::vector<ConvexPolygon> lower, sym;
    // strip under the corner piece, an 80 degree quad
    add_quad80(lower, poly({S1, {a, 0}, Z1, V1}, "strip"), cap, "strip");
    Point e1, W1;
    if (E.empty()) {
        e1 = lerp(V1, V1r, 0.5);
        W1 = lerp(H240, H180, 0.5);
    } else {
        e1 = E[0];
        W1 = hexhit(E[0]);
    }
    {
        Point p = lerp(V1, Z1, L->t1), q = lerp(e1, W1, L->t2);
        lower.push_back(poly({V1, p, q, e1}, "side cut"));
        lower.push_back(poly({p, Z1, H240, W1, q}, "side cut"));
    }
    if (E.size() >= 2) {
        std::vector<Point> W;
        for (auto& e : E)
            W.push_back(hexhit(e));
        std::size_t nf = E.size() - 1;
        for (std::size_t i = 0; 2 * i <= nf - 1; ++i) {
            ConvexPolygon fan = poly({E[i], W[i], W[i + 1], E[i + 1]}, "radial fan");
            std::vector<ConvexPolygon> cells;
            add_quad80(cells, fan, cap, "radial fan");
            bool self = i == nf - 1 - i;
            for (auto& c : cells)
                (self ? sym : lower).push_back(c);
        }
    }

    std::vector<ConvexPolygon> zone{ConvexPolygon(C)};
    zone.insert(zone.end(), sym.begin(), sym.end());
    for (auto& p : lower) {
        zone.push_back(p);
        std::vector<Point> r;
        for (auto& v : p)
            r.push_back(reflect30(v));
        zone.emplace_back(r);
    }
    for (auto& c : box_cells(a, s - a, 0, b, eps))
        zone.push_back(c);

    Partition out;
    const double k = 1.0 / s;
    auto place = [&](Point p, double ang) { return rotate(p, ang, G) * k; };
    out.host = ConvexPolygon{{0, 0}, {1, 0}, {0.5, sqrt3 / 2}};
    for (double ang : {0.0, 120.0, 240.0})
        for (auto& p : zone) {
            std::vector<Point> v;
            for (auto& q : p)
                v.push_back(place(q, ang));
            out.pieces.emplace_back(v);
        }
    out.pieces.push_back(regular_polygon(6, h * k, 0.0));
    {
        std::vector<Point> v;
        for (auto& q : out.pieces.back())
            v.push_back(q + G * k);
        out.pieces.back() = ConvexPolygon(v);
    }

    out.metadata["design"] = "equilateral";
    out.metadata["gamma_target"] = std::to_string(gamma_target);
    out.metadata["corner_vertices"] = std::to_string(L->m);
    return out;
}

}  // namespace cpart
