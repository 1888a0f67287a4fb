#include "cpart/constructions.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace cpart;

namespace {

std::vector<Point> random_points(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    std::vector<Point> p(n);
    for (auto& q : p)
        q = {u(rng), u(rng)};
    return p;
}

void enclosing_circle(benchmark::State& s)
{
    auto pts = random_points(static_cast<std::size_t>(s.range(0)), 3);
    for (auto _ : s)
        benchmark::DoNotOptimize(min_enclosing_circle(pts, 1));
}
BENCHMARK(enclosing_circle)->Arg(8)->Arg(64)->Arg(1024);

void inscribed_disk(benchmark::State& s)
{
    auto poly = regular_polygon(static_cast<int>(s.range(0)));
    for (auto _ : s)
        benchmark::DoNotOptimize(max_inscribed_disk(poly));
}
BENCHMARK(inscribed_disk)->Arg(4)->Arg(8)->Arg(16)->Arg(64)->Arg(128);

void twelve_objective(benchmark::State& s)
{
    auto x = square_design_vector(square_design_tuned(SquareDesign::twelve));
    for (auto _ : s)
        benchmark::DoNotOptimize(square_design_objective(SquareDesign::twelve, x));
}
BENCHMARK(twelve_objective);

void twentyone_objective(benchmark::State& s)
{
    auto x = square_design_vector(square_design_tuned(SquareDesign::twentyone));
    for (auto _ : s)
        benchmark::DoNotOptimize(square_design_objective(SquareDesign::twentyone, x));
}
BENCHMARK(twentyone_objective);

void validate_triangle(benchmark::State& s)
{
    auto p = equilateral_partition(1.51);
    for (auto _ : s)
        benchmark::DoNotOptimize(validate(p));
}
BENCHMARK(validate_triangle)->Unit(benchmark::kMillisecond);

void triangle_partition(benchmark::State& s)
{
    for (auto _ : s)
        benchmark::DoNotOptimize(equilateral_partition(1.51));
}
BENCHMARK(triangle_partition)->Unit(benchmark::kMillisecond);

void boundary_chain_bench(benchmark::State& s)
{
    for (auto _ : s)
        benchmark::DoNotOptimize(boundary_chain(1.28898));
}
BENCHMARK(boundary_chain_bench)->Name("boundary_chain");

}  // namespace

BENCHMARK_MAIN();
