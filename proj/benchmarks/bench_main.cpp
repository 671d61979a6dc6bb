#include <benchmark/benchmark.h>

#include <random>

#include "projdel/binary_forms.hpp"
#include "projdel/elimination.hpp"
#include "projdel/io.hpp"
#include "projdel/roots.hpp"
#include "projdel/tracking.hpp"

using namespace projdel;

namespace {

const std::vector<std::string> X123{"x1", "x2", "x3"};

MultiPoly random_poly(std::mt19937& rng, unsigned d) {
    std::uniform_int_distribution<int> coeff(-9, 9), e(0, 2);
    MultiPoly p(X123);
    for (unsigned k = 0; k <= d; ++k)
        for (int t = 0; t < 3; ++t)
            p.add_term({static_cast<std::uint32_t>(e(rng)), static_cast<std::uint32_t>(e(rng)), k}, coeff(rng));
    p.add_term({0, 0, d}, 10);
    return p;
}

void BM_Resultant(benchmark::State& state) {
    std::mt19937 rng(1);
    const unsigned d = static_cast<unsigned>(state.range(0));
    const MultiPoly p = random_poly(rng, d), q = random_poly(rng, d);
    for (auto _ : state) benchmark::DoNotOptimize(resultant_fixed(p, q, d, d));
}
BENCHMARK(BM_Resultant)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Discriminant(benchmark::State& state) {
    std::mt19937 rng(2);
    const unsigned d = static_cast<unsigned>(state.range(0));
    const MultiPoly p = random_poly(rng, d);
    for (auto _ : state) benchmark::DoNotOptimize(discriminant_fixed(p, d));
}
BENCHMARK(BM_Discriminant)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MoebiusTransform(benchmark::State& state) {
    std::mt19937 rng(3);
    const unsigned d = static_cast<unsigned>(state.range(0));
    const MultiPoly p = random_poly(rng, d);
    const Matrix2 a{2, -1, 3, 5};
    for (auto _ : state) benchmark::DoNotOptimize(moebius_transform(p, a, d));
}
BENCHMARK(BM_MoebiusTransform)->DenseRange(2, 8, 2);

void BM_Isolation(benchmark::State& state) {
    // Wilkinson-style product of (x - k/3) times x^2 - 2
    UniPoly u{-2, 0, 1};
    for (int k = 1; k <= state.range(0); ++k) u = u * UniPoly::linear_root(Rat(k, 3));
    for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(u));
}
BENCHMARK(BM_Isolation)->RangeMultiplier(2)->Range(2, 16);

void BM_TrackCircle(benchmark::State& state) {
    const MultiPoly p = io::parse_polynomial("(1 - x1)*x3^4 + 4*x2*x3^3 + (2 + 6*x1)*x3^2 - 4*x2*x3 + (1 - x1)", X123);
    const BasePath path = BasePath::circle({0, 0}, 1, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(track_roots(p, path));
}
BENCHMARK(BM_TrackCircle)->Arg(180)->Arg(720)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
