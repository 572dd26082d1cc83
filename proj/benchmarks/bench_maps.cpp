#include <benchmark/benchmark.h>

#include "solq/bijection.hpp"
#include "solq/family.hpp"
#include "solq/involution.hpp"

using namespace solq;

namespace {

void PsiOrbitSweep(benchmark::State& state) {
    long long n = state.range(0);
    for (auto _ : state) {
        PsiOrbits orbits = psi_orbits(n);
        benchmark::DoNotOptimize(orbits);
    }
}
BENCHMARK(PsiOrbitSweep)->Arg(18)->Arg(26);

void ThetaOrbitSweep(benchmark::State& state) {
    long long n = state.range(0);
    for (auto _ : state) {
        ThetaOrbits orbits = theta_orbits(n);
        benchmark::DoNotOptimize(orbits);
    }
}
BENCHMARK(ThetaOrbitSweep)->Arg(8)->Arg(12);

void PhiRoundtrip(benchmark::State& state) {
    long long cap = state.range(0);
    std::vector<Partition> members;
    for (long long n = 0; n <= cap; ++n)
        for (const Partition& p : enumerate_all(n, FamilyTag::strict())) members.push_back(p);
    for (auto _ : state) {
        for (const Partition& lambda : members) {
            auto inv = phi_inverse(BaseKind::Family::main, lambda);
            auto [back, trace] = phi(inv.kind, inv.mu, inv.eta);
            benchmark::DoNotOptimize(back);
        }
    }
}
BENCHMARK(PhiRoundtrip)->Arg(15)->Arg(20);

void EnumerateCFamily(benchmark::State& state) {
    for (auto _ : state) {
        long long count = family_count(state.range(0), FamilyTag::c_family());
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(EnumerateCFamily)->Arg(30)->Arg(40);

} // namespace
