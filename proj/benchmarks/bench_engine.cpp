#include <benchmark/benchmark.h>

#include "solq/gf.hpp"
#include "solq/registry.hpp"

using namespace solq;

namespace {

void SeriesMul(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    QSeries a = IdentityRegistry::instance().rhs("ID_122", order);
    QSeries b = IdentityRegistry::instance().rhs("ID_121", order);
    for (auto _ : state) {
        QSeries c = a.mul(b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(SeriesMul)->Arg(30)->Arg(60);

void DoubleSumLSol(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        QSeries s = IdentityRegistry::instance().lhs("GF_L_SOL", order);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(DoubleSumLSol)->Arg(20)->Arg(40);

void PochhammerInf(benchmark::State& state) {
    Mono u;
    u[Var::u] = 1;
    for (auto _ : state) {
        QSeries s = pochhammer(QMonomial{-1, u, 1}, 1, std::nullopt,
                               static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(PochhammerInf)->Arg(30)->Arg(60);

void GfEnumerateStrict(benchmark::State& state) {
    for (auto _ : state) {
        QSeries s = gf_enumerate(FamilyTag::strict(),
                                 {{Stat::odd_seq_count, Var::x}, {Stat::length, Var::y}},
                                 static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(GfEnumerateStrict)->Arg(20)->Arg(30);

void VerifyAu2(benchmark::State& state) {
    for (auto _ : state) {
        auto rep = IdentityRegistry::instance().verify_series("AU2",
                                                              static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(VerifyAu2)->Arg(40)->Arg(60);

} // namespace
