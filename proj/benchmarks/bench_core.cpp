// bench_core.cpp - microbenchmarks for the hot paths: assignment solves,
// sector diagonalization, reductions, and window enumeration.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "xxzstrip/assignment.hpp"
#include "xxzstrip/bounds.hpp"
#include "xxzstrip/entanglement.hpp"
#include "xxzstrip/hamiltonian.hpp"
#include "xxzstrip/metric.hpp"

using namespace xxzstrip;

namespace {

std::vector<std::vector<std::int64_t>> random_cost(int n, std::uint32_t seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<std::int64_t> d(0, 50);
    std::vector<std::vector<std::int64_t>> cost(static_cast<std::size_t>(n),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(n)));
    for (auto& row : cost)
        for (auto& c : row) c = d(gen);
    return cost;
}

void bm_assignment(benchmark::State& state) {
    const auto cost = random_cost(static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(solve_assignment(cost));
}
BENCHMARK(bm_assignment)->Arg(4)->Arg(9)->Arg(16);

void bm_build_hamiltonian(benchmark::State& state) {
    const StripGeometry geom = build_strip(static_cast<int>(state.range(0)), 1);
    const SectorBasis basis = enumerate_sector(geom, geom.half_length());
    const SitePotential v = SitePotential::zero(geom);
    for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(basis, 4.0, v));
    state.SetLabel("dim " + std::to_string(basis.size()));
}
BENCHMARK(bm_build_hamiltonian)->Arg(3)->Arg(5)->Arg(7);

void bm_solve_sector(benchmark::State& state) {
    const StripGeometry geom = build_strip(static_cast<int>(state.range(0)), 1);
    const SectorBasis basis = enumerate_sector(geom, geom.half_length());
    const Eigen::MatrixXd h = build_hamiltonian(basis, 4.0, SitePotential::zero(geom));
    for (auto _ : state) benchmark::DoNotOptimize(solve_sector(h));
    state.SetLabel("dim " + std::to_string(basis.size()));
}
BENCHMARK(bm_solve_sector)->Arg(3)->Arg(4)->Arg(5);

void bm_reduce(benchmark::State& state) {
    const StripGeometry geom = build_strip(static_cast<int>(state.range(0)), 1);
    const SectorBasis basis = enumerate_sector(geom, geom.half_length());
    Eigen::VectorXd psi = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(basis.size()));
    psi.normalize();
    for (auto _ : state) benchmark::DoNotOptimize(reduce(psi, basis, Side::right));
    state.SetLabel("dim " + std::to_string(basis.size()));
}
BENCHMARK(bm_reduce)->Arg(3)->Arg(5)->Arg(7);

void bm_histogram(benchmark::State& state) {
    const int margin = static_cast<int>(state.range(0));
    const RectangleSpec rect{1, 2, 2};
    const ColumnWindow window{1 - margin, 2 + margin};
    for (auto _ : state) benchmark::DoNotOptimize(rect_distance_histogram(rect, window));
}
BENCHMARK(bm_histogram)->Arg(2)->Arg(4)->Arg(6);

void bm_family_distance(benchmark::State& state) {
    const StripGeometry geom = build_strip(static_cast<int>(state.range(0)), 2);
    const Configuration x =
        Configuration({{geom.half_length() + 1, 1}, {geom.half_length() + 2, 2}});
    for (auto _ : state)
        benchmark::DoNotOptimize(family_rect_distance(x, 2 * geom.width(), geom));
}
BENCHMARK(bm_family_distance)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
