#include <benchmark/benchmark.h>

#include "manin/field.hpp"
#include "manin/heights.hpp"
#include "manin/poly.hpp"
#include "manin/sections.hpp"

using namespace manin;

static void BM_FieldMul(benchmark::State& state) {
    FieldCtx F((int)state.range(0), (int)state.range(1));
    int q = F.q();
    int x = 1;
    for (auto _ : state) {
        for (int a = 1; a < q; ++a) x = F.mul(x, a);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_FieldMul)->Args({2, 3})->Args({3, 2})->Args({5, 1});

static void BM_DivisorOf(benchmark::State& state) {
    FieldCtx F(2, 1);
    int d = (int)state.range(0);
    long long total = form_count(F, d);
    long long idx = 1;
    for (auto _ : state) {
        BinaryForm f = form_from_index(F, d, idx);
        if (!f.is_zero()) benchmark::DoNotOptimize(divisor_of(F, f));
        idx = idx % (total - 1) + 1;
    }
}
BENCHMARK(BM_DivisorOf)->Arg(6)->Arg(10);

static void BM_RowReduce(benchmark::State& state) {
    FieldCtx F(3, 1);
    int n = (int)state.range(0);
    MatFq m;
    m.rows = n;
    m.cols = n + 4;
    m.a.resize((size_t)m.rows * m.cols);
    unsigned s = 12345;
    for (auto& v : m.a) {
        s = s * 1103515245u + 12345u;
        v = (int)(s >> 16) % F.q();
    }
    for (auto _ : state) {
        MatFq copy = m;
        benchmark::DoNotOptimize(row_reduce(F, copy));
    }
}
BENCHMARK(BM_RowReduce)->Arg(16)->Arg(48);

static void BM_TorsorCount(benchmark::State& state) {
    FieldCtx F(2, 1);
    for (auto _ : state) {
        auto table = count_torsor(F, (int)state.range(0), 1);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_TorsorCount)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
