#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "fibwords/analysis.hpp"
#include "fibwords/bijections.hpp"
#include "fibwords/families.hpp"
#include "fibwords/verify.hpp"
#include "fibwords/word.hpp"

namespace {

using fibwords::BinaryWord;
using fibwords::Family;
using fibwords::FamilyId;

// Fixed pseudo-random binary word of the requested length.
BinaryWord sample_word(int n) {
    std::uint64_t state = 0x9E3779B97F4A7C15ull;
    std::vector<int> letters(static_cast<std::size_t>(n));
    for (int& a : letters) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        a = 1 + static_cast<int>(state & 1);
    }
    return BinaryWord(std::move(letters));
}

void BM_Statistics(benchmark::State& state) {
    const BinaryWord w = sample_word(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fibwords::des(w));
        benchmark::DoNotOptimize(fibwords::maj(w));
        benchmark::DoNotOptimize(fibwords::inv(w));
        benchmark::DoNotOptimize(fibwords::exc(w));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Statistics)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_GammaStandardization(benchmark::State& state) {
    const BinaryWord w = sample_word(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fibwords::gamma(w));
}
BENCHMARK(BM_GammaStandardization)->RangeMultiplier(4)->Range(16, 1024);

void BM_GammaClosedForm(benchmark::State& state) {
    const BinaryWord w = sample_word(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fibwords::gamma_closed_form(w));
}
BENCHMARK(BM_GammaClosedForm)->RangeMultiplier(4)->Range(16, 1024);

void BM_Phi1RoundTrip(benchmark::State& state) {
    const BinaryWord w = sample_word(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fibwords::phi1(fibwords::phi1_inv(w)));
}
BENCHMARK(BM_Phi1RoundTrip)->RangeMultiplier(4)->Range(16, 1024);

void BM_EnumerateFib(benchmark::State& state) {
    const FamilyId id{Family::Fib, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(fibwords::family_count(id));
}
BENCHMARK(BM_EnumerateFib)->DenseRange(16, 24, 4);

void BM_EnumerateR(benchmark::State& state) {
    const FamilyId id{Family::R, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(fibwords::family_count(id));
}
BENCHMARK(BM_EnumerateR)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyThm21(benchmark::State& state) {
    fibwords::VerifyOptions opts;
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(fibwords::run_theorem("thm2.1", n, n, opts));
}
BENCHMARK(BM_VerifyThm21)->DenseRange(12, 18, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
