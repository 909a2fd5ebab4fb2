#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "noiseverify/analysis.hpp"
#include "noiseverify/common_coin.hpp"
#include "noiseverify/continuum_logic.hpp"
#include "noiseverify/rtw_logic.hpp"
#include "noiseverify/session.hpp"

using namespace noiseverify;

namespace {

const CoinSeed& bench_seed() {
    static CoinSeed seed = CoinSeed::from_uint64(0xBE7C4);
    return seed;
}

void BM_PrfWord(benchmark::State& state) {
    Prf prf(bench_seed());
    std::uint64_t a = 0;
    for (auto _ : state) {
        ++a;
        benchmark::DoNotOptimize(prf.word(prf_domain::kRtw, a, a ^ 0x5555));
    }
}
BENCHMARK(BM_PrfWord);

void BM_TelegraphBit(benchmark::State& state) {
    std::uint64_t tick = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(derive_rtw_bit(bench_seed(), NoiseCell{7, 1, ++tick}));
    }
}
BENCHMARK(BM_TelegraphBit);

void BM_GaussianSample(benchmark::State& state) {
    Prf prf(bench_seed());
    std::uint64_t tick = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(derive_gaussian_sample(prf, 3, ++tick));
    }
}
BENCHMARK(BM_GaussianSample);

// fingerprint throughput over input bytes at a given component count
void BM_FingerprintBytes(benchmark::State& state) {
    const auto k = static_cast<std::uint32_t>(state.range(0));
    std::vector<std::uint8_t> data(1 << 16);
    std::mt19937_64 rng(1);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng());
    FingerprintAccumulator acc(bench_seed(), k);
    for (auto _ : state) {
        acc.reset();
        acc.absorb_bytes(data);
        benchmark::DoNotOptimize(acc.packed_words().data());
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * data.size());
}
BENCHMARK(BM_FingerprintBytes)->Arg(8)->Arg(64)->Arg(84)->Arg(256);

void BM_HashDigest(benchmark::State& state) {
    std::vector<std::uint8_t> data(static_cast<std::size_t>(state.range(0)));
    std::mt19937_64 rng(2);
    for (auto& b : data) b = static_cast<std::uint8_t>(rng());
    for (auto _ : state) {
        benchmark::DoNotOptimize(hash_digest(std::span<const std::uint8_t>(data), bench_seed(), 84));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * data.size());
}
BENCHMARK(BM_HashDigest)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

void BM_LoopbackSession(benchmark::State& state) {
    const auto L = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(3);
    BitString s = random_bitstring(rng, L);
    for (auto _ : state) {
        SessionEngine init(Role::Initiator, bench_seed(), 1e-25,
                           fingerprinter_for(s, bench_seed()));
        SessionEngine resp(Role::Responder, bench_seed(), std::nullopt,
                           fingerprinter_for(s, bench_seed()));
        benchmark::DoNotOptimize(run_loopback(init, resp));
    }
}
BENCHMARK(BM_LoopbackSession)->Arg(64)->Arg(1024)->Arg(65536);

void BM_HyperspaceVector(benchmark::State& state) {
    const auto L = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(4);
    BitString s = random_bitstring(rng, L);
    for (auto _ : state) {
        benchmark::DoNotOptimize(string_hyperspace_vector(s, bench_seed(), 4096));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 4096);
}
BENCHMARK(BM_HyperspaceVector)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
