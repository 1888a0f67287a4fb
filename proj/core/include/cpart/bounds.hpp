#pragma once

#include <functional>
#include <string>
#include <vector>

namespace cpart {

struct BalanceSolution {
    double theta = 0;   // degrees
    double gamma = 0;
    double residual = 0;
    int iterations = 0;
};

struct ChainLevel {
    double theta = 0;   // degrees
    double r = 0;
    double phi = 0;     // degrees
    double gamma = 0;
};

double gamma_one_regular(int k);
double gamma_theta(double theta);
double gamma_corner_A(double theta);
double gamma_bottleneck_simple(double theta);
double gamma_bottleneck_three_point(double theta);

BalanceSolution solve_balance(const std::function<double(double)>& f, const std::function<double(double)>& g,
                              double lo, double hi);

double sandwich_gamma(double theta);
double touching_radius(double theta);

// slant angle of the next tangent line, from the feet geometry of the
// sandwich and touching configurations
double next_level_angle(double theta, double gamma);
// the closed form as it appears in print; kept for comparison
double next_level_angle_printed(double theta, double gamma);

ChainLevel chain_level(double theta, double gamma);

// residual(theta) has its root at the corner duplication condition;
// gamma(theta) is the ratio reported at that root
struct ChainPredicate {
    std::function<double(double)> residual;
    std::function<double(double)> gamma;
};

inline constexpr double tangent_target_phi = 90.0;

ChainPredicate default_chain_predicate(double target_phi = tangent_target_phi);
// phi(theta, gamma_fixed) == target
ChainPredicate fixed_gamma_predicate(double gamma_fixed, double target_phi = tangent_target_phi);

BalanceSolution tangent_chain_bound(const ChainPredicate& pred = default_chain_predicate(), double lo = 76.0,
                                    double hi = 89.0);

// R/r for (2r - R)^2 + r^2 = R^2
double right_triangle_ratio();

}  // namespace cpart
