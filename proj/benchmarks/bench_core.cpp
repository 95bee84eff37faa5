#include "k3fix4/fibers.hpp"
#include "k3fix4/fibration.hpp"
#include "k3fix4/lattice.hpp"
#include "k3fix4/smith.hpp"
#include "k3fix4/tables.hpp"
#include "k3fix4/verify.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace k3fix4;

static void BM_SmithRandom8x8(benchmark::State& state)
{
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> entry(-9, 9);
    IntMatrix m(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) m(i, j) = entry(rng);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithRandom8x8);

static void BM_ProfileRank18(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(two_elementary_profile(make_lattice("U+E8+E7+A1")));
}
BENCHMARK(BM_ProfileRank18);

static void BM_EnumerateTable(benchmark::State& state, const char* id)
{
    for (auto _ : state) benchmark::DoNotOptimize(enumerate(id));
}
BENCHMARK_CAPTURE(BM_EnumerateTable, t2, "t2");
BENCHMARK_CAPTURE(BM_EnumerateTable, t6, "t6");
BENCHMARK_CAPTURE(BM_EnumerateTable, thm81, "thm81");

static void BM_Corollary1IrrIrr(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_corollary1({false, false}));
}
BENCHMARK(BM_Corollary1IrrIrr);

static void BM_FamilyDiscriminant(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(family_discriminant_coeffs());
}
BENCHMARK(BM_FamilyDiscriminant);

static void BM_VerifyAll(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(verify_all());
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
