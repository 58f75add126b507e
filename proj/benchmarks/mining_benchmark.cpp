// Mining throughput on seeded synthetic contexts.

#include <benchmark/benchmark.h>

#include <random>

#include "bondmine/measures.hpp"
#include "bondmine/miner.hpp"
#include "bondmine/representation.hpp"

using namespace bondmine;

namespace {

// Blocks of co-occurring items over a noisy background, so the miners see
// correlated structure several levels deep.
TransactionDb synthetic_db(std::size_t items, std::size_t transactions, unsigned seed) {
    const std::size_t block = 8;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> cell(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> block_d(0, items / block - 1);
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(transactions);
    for (std::size_t t = 0; t < transactions; ++t) {
        std::vector<std::int64_t> row;
        for (int b = 0; b < 2; ++b) {
            const std::size_t base = block_d(rng) * block;
            for (std::size_t k = 0; k < block; ++k)
                if (cell(rng) < 0.8) row.push_back(static_cast<std::int64_t>(base + k));
        }
        for (std::size_t i = 0; i < items; ++i)
            if (cell(rng) < 0.02) row.push_back(static_cast<std::int64_t>(i));
        if (row.empty()) row.push_back(static_cast<std::int64_t>(t % items));
        rows.push_back(std::move(row));
    }
    return TransactionDb::from_transactions(rows);
}

MiningConfig rcpr_config(std::int64_t minsupp) {
    MiningConfig cfg;
    cfg.minsupp_absolute = minsupp;
    cfg.minbond = Rational(3, 10);
    cfg.scenario = Scenario::Rcpr;
    return cfg;
}

void BM_SupportCounting(benchmark::State& state) {
    const auto db = synthetic_db(40, 2000, 7);
    Itemset probe{0, 1, 2, 3};
    for (auto _ : state) {
        const auto t = supports(db, probe);
        benchmark::DoNotOptimize(t.conj + t.disj);
    }
}
BENCHMARK(BM_SupportCounting);

void BM_MineGmjpRcpr(benchmark::State& state) {
    const auto db = synthetic_db(static_cast<std::size_t>(state.range(0)), 500, 11);
    const auto cfg = rcpr_config(250);
    for (auto _ : state) {
        const auto result = mine_gmjp(db, cfg, 1);
        benchmark::DoNotOptimize(result.rep.distinct_size());
    }
}
BENCHMARK(BM_MineGmjpRcpr)->Arg(16)->Arg(32);

void BM_MineOptRcpr(benchmark::State& state) {
    const auto db = synthetic_db(static_cast<std::size_t>(state.range(0)), 500, 11);
    const auto cfg = rcpr_config(250);
    for (auto _ : state) {
        const auto result = mine_opt(db, cfg, 1);
        benchmark::DoNotOptimize(result.rep.distinct_size());
    }
}
BENCHMARK(BM_MineOptRcpr)->Arg(16)->Arg(32)->Arg(64);

void BM_MineOptRcprParallel(benchmark::State& state) {
    const auto db = synthetic_db(64, 2000, 11);
    const auto cfg = rcpr_config(1000);
    for (auto _ : state) {
        const auto result = mine_opt(db, cfg, static_cast<unsigned>(state.range(0)));
        benchmark::DoNotOptimize(result.rep.distinct_size());
    }
}
BENCHMARK(BM_MineOptRcprParallel)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

void BM_RegenerateRcp(benchmark::State& state) {
    const auto db = synthetic_db(24, 500, 13);
    const auto rep = mine_gmjp(db, rcpr_config(250), 1).rep;
    for (auto _ : state) {
        const auto rcp = regenerate_rcp(rep);
        benchmark::DoNotOptimize(rcp.size());
    }
}
BENCHMARK(BM_RegenerateRcp);

}  // namespace

BENCHMARK_MAIN();
