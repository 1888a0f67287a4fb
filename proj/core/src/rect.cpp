#include "cpart/constructions.hpp"

#include <cmath>

namespace cpart {

RectPartitionParams RectPartitionParams::make(double a, double b, double eps)
{
    if (!(a > 0 && b >= a && eps > 0) || !std::isfinite(b) || !std::isfinite(eps))
        throw std::invalid_argument("partition_rectangle: need 0 < a <= b and eps > 0");
    RectPartitionParams p;
    p.a = a;
    p.b = b;
    p.eps = eps;
    p.k_b = static_cast<long>(std::ceil(1.0 / eps - 1e-12));
    p.k_a = static_cast<long>(std::ceil(a / (b / p.k_b) - 1e-12));
    p.delta = a / p.k_a;
    // each row of height delta gets floor(b/delta) equal cells, so every
    // cell is at least delta wide and below delta (1 + 1/k_b)
    p.cells_per_row = static_cast<long>(std::floor(b / p.delta + 1e-12));
    return p;
}

std::vector<ConvexPolygon> rectangle_cells(Point origin, Point along_b, double a, double b, double eps)
{
    auto p = RectPartitionParams::make(a, b, eps);
    Point u = unit(along_b), v{-u.y, u.x};
    double w = b / p.cells_per_row;
    std::vector<ConvexPolygon> out;
    out.reserve(p.k_a * p.cells_per_row);
    for (long r = 0; r < p.k_a; ++r) {
        double y0 = r * p.delta, y1 = r + 1 == p.k_a ? a : (r + 1) * p.delta;
        for (long c = 0; c < p.cells_per_row; ++c) {
            double x0 = c * w, x1 = c + 1 == p.cells_per_row ? b : (c + 1) * w;
            auto at = [&](double x, double y) { return origin + u * x + v * y; };
            out.push_back(ConvexPolygon{at(x0, y0), at(x1, y0), at(x1, y1), at(x0, y1)});
        }
    }
    return out;
}

Partition partition_rectangle(double a, double b, double eps)
{
    auto prm = RectPartitionParams::make(a, b, eps);
    Partition p;
    p.host = ConvexPolygon{{0, 0}, {b, 0}, {b, a}, {0, a}};
    p.pieces = rectangle_cells({0, 0}, {1, 0}, a, b, eps);
    p.metadata["design"] = "rectangle";
    p.metadata["k_a"] = std::to_string(prm.k_a);
    p.metadata["k_b"] = std::to_string(prm.k_b);
    return p;
}

double gamma_rectangle(double a_ratio)
{
    if (!(a_ratio >= 1))
        throw std::invalid_argument("gamma_rectangle: ratio < 1");
    return std::sqrt(1 + a_ratio * a_ratio);
}

}  // namespace cpart
