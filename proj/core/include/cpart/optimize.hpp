#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace cpart {

inline constexpr double infeasible_penalty = 1e6;

struct Objective {
    std::function<double(const std::vector<double>&)> f;
    std::vector<std::pair<double, double>> bounds;   // one (lo, hi) per coordinate
    std::size_t dim() const { return bounds.size(); }
};

struct OptResult {
    std::vector<double> best_params;
    double best_gamma = 0;
    std::size_t evaluations = 0;
    std::vector<std::pair<std::vector<double>, double>> trace;
};

struct MinimizeOptions {
    int restarts = 3;
    double jitter = 0.10;        // fraction of each bound range
    double initial_step = 0.05;  // fraction of each bound range
    double xtol = 1e-9;          // simplex diameter
};

OptResult minimize(const Objective& obj, const std::vector<double>& x0, std::uint64_t seed, std::size_t budget,
                   const MinimizeOptions& opts = {});

}  // namespace cpart
