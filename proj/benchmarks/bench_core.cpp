#include <benchmark/benchmark.h>

#include <random>

#include "zp2/lifting.hpp"
#include "zp2/equivalence.hpp"

namespace {

zp2::ResidueMatrix random_square_mat(std::mt19937_64& rng, uint32_t p, size_t rows,
                                     size_t cols) {
    zp2::ResidueMatrix m(zp2::Modulus::square(p), rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c)
            m.set(i, c, static_cast<uint32_t>(rng() % (p * p)));
    return m;
}

void bench_howell_form(benchmark::State& state) {
    const uint32_t p = static_cast<uint32_t>(state.range(0));
    const size_t n = static_cast<size_t>(state.range(1));
    std::mt19937_64 rng(42);
    std::vector<zp2::ResidueMatrix> inputs;
    for (int i = 0; i < 64; ++i) inputs.push_back(random_square_mat(rng, p, n / 2 + 1, n));
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(zp2::howell_form(inputs[i++ & 63]));
    }
}
BENCHMARK(bench_howell_form)->Args({2, 8})->Args({3, 6})->Args({5, 6});

void bench_free_so_lifts(benchmark::State& state) {
    zp2::FpCode c1 = zp2::FpCode::from_rows(3, 4, {{1, 1, 1, 0}});
    for (auto _ : state) {
        auto sol = zp2::free_so_lifts(c1);
        uint64_t count = 0;
        sol.for_each_member([&](const zp2::ResidueMatrix& nm) {
            benchmark::DoNotOptimize(sol.code_for(nm));
            ++count;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(bench_free_so_lifts);

void bench_oracle_sweep(benchmark::State& state) {
    for (auto _ : state) {
        uint64_t n = 0;
        zp2::oracle_enumerate(2, 4, zp2::OracleFamily::SelfOrthogonal,
                              [&n](const zp2::CodeZp2&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(bench_oracle_sweep);

void bench_aut_order(benchmark::State& state) {
    zp2::CodeZp2 c = zp2::CodeZp2::from_generators(3, 4, {{1, 1, 4, 0}, {0, 3, 6, 0}});
    for (auto _ : state) benchmark::DoNotOptimize(zp2::aut_order(c));
}
BENCHMARK(bench_aut_order);

void bench_gaussian(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zp2::gaussian(24, 12, 5));
}
BENCHMARK(bench_gaussian);

}  // namespace

BENCHMARK_MAIN();
