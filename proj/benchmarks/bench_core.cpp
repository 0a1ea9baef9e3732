#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "stacksort/enumeration.hpp"
#include "stacksort/fertility.hpp"

using namespace stacksort;

static void BM_StackSortPass(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<int> entries(static_cast<size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    std::mt19937 rng(7);
    std::shuffle(entries.begin(), entries.end(), rng);
    std::vector<int> out(entries.size()), stack(entries.size());
    for (auto _ : state) {
        detail::stack_sort_raw(entries, out, stack);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_StackSortPass)->Arg(64)->Arg(1024)->Arg(16384);

static void BM_EnumerateConfigurations(benchmark::State& state) {
    Permutation p = Permutation::parse("2.7.3.5.9.10.11.4.8.1.6.12.13.14.15.16");
    for (auto _ : state) {
        auto configs = enumerate_vhc_02(p);
        benchmark::DoNotOptimize(configs.size());
    }
}
BENCHMARK(BM_EnumerateConfigurations);

static void BM_FertilityProfile(benchmark::State& state) {
    Permutation p = Permutation::parse("2.7.3.5.9.10.11.4.8.1.6.12.13.14.15.16");
    for (auto _ : state) {
        FertilityProfile prof = profile(p);
        benchmark::DoNotOptimize(prof.total.get_mpz_t());
    }
}
BENCHMARK(BM_FertilityProfile);

static void BM_CountDirect(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        DescentTally tally = count_direct(2, n);
        benchmark::DoNotOptimize(tally.total.get_mpz_t());
    }
}
BENCHMARK(BM_CountDirect)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
