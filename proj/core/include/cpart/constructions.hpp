#pragma once

#include "cpart/optimize.hpp"
#include "cpart/partition.hpp"

#include <cstdint>
#include <functional>

namespace cpart {

// rectangle lemma

struct RectPartitionParams {
    double a = 0, b = 0, eps = 0;   // a short side, b long side
    long k_b = 0, k_a = 0;
    double delta = 0;
    long cells_per_row = 0;
    static RectPartitionParams make(double a, double b, double eps);
};

// host [0,b] x [0,a]
Partition partition_rectangle(double a, double b, double eps);
// the same cells placed on an arbitrary origin and axis frame
std::vector<ConvexPolygon> rectangle_cells(Point origin, Point along_b, double a, double b, double eps);
double gamma_rectangle(double a_ratio);

// 80 degree quadrilaterals and curves

inline constexpr double quad80_lo = 79.0, quad80_hi = 101.0;

bool is_80quad(const ConvexPolygon& q);
Partition partition_80quad(const ConvexPolygon& q, double gamma_cap = 1.5);

struct CurvePair {
    std::function<Point(double)> A, B;
    int n = 1;
};

std::vector<ConvexPolygon> partition_curve_strip(const CurvePair& c, double gamma_cap = 1.5);

// equilateral triangle

ConvexPolygon corner_piece_60(int m, double slack);
// smallest corner ratio reachable with m vertices
double corner_piece_60_min_gamma(int m);
Partition equilateral_partition(double gamma_target);

// square designs on the unit square [0,1]^2

enum class SquareDesign { twelve, twentyone };

struct SquareDesignParams {
    SquareDesign design = SquareDesign::twelve;
    double theta = 0;            // degrees
    std::vector<double> free;    // see square_design_free_names
};

std::vector<std::string> square_design_free_names(SquareDesign d);
SquareDesignParams square_design_start(SquareDesign d);
// tuned parameters, as found by optimize_square_design
SquareDesignParams square_design_tuned(SquareDesign d);
// pieces in order; throws std::invalid_argument for self-intersecting input
Partition square_design(const SquareDesignParams& p);
// parameter vector (theta first) and box used by the optimizer
std::vector<double> square_design_vector(const SquareDesignParams& p);
SquareDesignParams square_design_from_vector(SquareDesign d, const std::vector<double>& x);
std::vector<std::pair<double, double>> square_design_bounds(SquareDesign d);
// max piece ratio, or a penalty above infeasible_penalty/2 when pieces are not convex
double square_design_objective(SquareDesign d, const std::vector<double>& x);

struct SquareOptimization {
    SquareDesignParams params;
    OptResult result;
};

SquareOptimization optimize_square_design(SquareDesign d, std::uint64_t seed, std::size_t budget);

// boundary chain along one side of the square

struct BoundaryChain {
    std::vector<ConvexPolygon> pieces;
    std::vector<double> angles;   // 90, theta_1, ..., 90
    std::vector<double> piece_gamma;
};

// smallest circle through feet -cot(theta/2) and tan(theta_next/2) that encloses the unit disk at (0,1)
double chain_min_radius(double theta, double theta_next);
BoundaryChain boundary_chain(double gamma, double theta0 = 90.0);

}  // namespace cpart
