#include "cpart/constructions.hpp"
#include "cpart/optimize.hpp"

#include <doctest.h>

#include <cmath>

using namespace cpart;

namespace {

Objective bowl()
{
    return {[](const std::vector<double>& x) { return (x[0] - 0.3) * (x[0] - 0.3) + 1.3; }, {{-1.0, 1.0}}};
}

}  // namespace

TEST_CASE("quadratic bowl")
{
    auto r = minimize(bowl(), {0.0}, 1, 2000);
    CHECK(std::abs(r.best_gamma - 1.3) <= 1e-6);
    CHECK(std::abs(r.best_params[0] - 0.3) <= 1e-3);
    CHECK(r.evaluations <= 2000);
    CHECK(r.best_gamma == bowl().f(r.best_params));
}

TEST_CASE("trace never increases")
{
    Objective rosen{[](const std::vector<double>& x) {
                        return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
                    },
                    {{-2.0, 2.0}, {-2.0, 2.0}}};
    auto r = minimize(rosen, {-1.2, 1.0}, 3, 5000);
    for (std::size_t i = 1; i < r.trace.size(); ++i)
        CHECK(r.trace[i].second <= r.trace[i - 1].second);
    CHECK(r.best_gamma <= 1e-4);
}

TEST_CASE("determinism")
{
    Objective f{[](const std::vector<double>& x) { return std::abs(x[0] - 0.1) + std::abs(x[1] + 0.4) + 2; },
                {{-1.0, 1.0}, {-1.0, 1.0}}};
    auto a = minimize(f, {0.5, 0.5}, 9, 800);
    auto b = minimize(f, {0.5, 0.5}, 9, 800);
    CHECK(a.best_params == b.best_params);
    CHECK(a.best_gamma == b.best_gamma);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.trace.size() == b.trace.size());
}

TEST_CASE("tiny budget")
{
    auto r = minimize(bowl(), {0.9}, 0, 2);
    CHECK(r.evaluations <= 2);
    CHECK(r.best_gamma <= bowl().f({0.9}));
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(minimize(bowl(), {0.0}, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(minimize(bowl(), {2.0}, 0, 100), std::invalid_argument);
    Objective bad{[](const std::vector<double>&) { return std::nan(""); }, {{0.0, 1.0}}};
    CHECK_THROWS(minimize(bad, {0.5}, 0, 100));
}

TEST_CASE("penalty instead of exceptions")
{
    auto b = square_design_bounds(SquareDesign::twelve);
    std::vector<double> x;
    for (auto [lo, hi] : b)
        x.push_back(hi);
    double v = square_design_objective(SquareDesign::twelve, x);
    CHECK(std::isfinite(v));
    CHECK(v >= 1);
}

TEST_CASE("twelve design from the start point")
{
    auto s = square_design_start(SquareDesign::twelve);
    CHECK(s.theta == doctest::Approx(89.62));
    auto r = optimize_square_design(SquareDesign::twelve, 0, 20000);
    CHECK(r.result.best_gamma <= 1.3430);
    CHECK(r.result.best_gamma <= square_design_objective(SquareDesign::twelve, square_design_vector(s)));
    CHECK(r.result.evaluations <= 20000);
}
