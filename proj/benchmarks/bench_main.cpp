#include <benchmark/benchmark.h>

#include <random>

#include "acbm/example_f6.hpp"
#include "acbm/geometry.hpp"

using namespace acbm;

namespace {

Poly dense_poly(const ParamSetPtr& ps, std::mt19937_64& rng, int terms) {
    std::uniform_int_distribution<int> coeff(-20, 20);
    std::uniform_int_distribution<int> exp(0, 3);
    Poly out = Poly::zero(ps);
    for (int t = 0; t < terms; ++t) {
        Poly::Monomial mono(ps->size(), 0);
        for (auto& e : mono) e = static_cast<std::uint32_t>(exp(rng));
        out.add_term(mono, Rational(coeff(rng), 1));
    }
    return out;
}

void BM_PolyMultiply(benchmark::State& state) {
    auto ps = make_param_set({"l1", "l2", "l3", "l4", "m1", "m3"});
    std::mt19937_64 rng(1);
    const Poly a = dense_poly(ps, rng, static_cast<int>(state.range(0)));
    const Poly b = dense_poly(ps, rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Poly c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_PolyMultiply)->Arg(8)->Arg(32)->Arg(128);

void BM_LeviCivitaSymbolic(benchmark::State& state) {
    const AlgebraModel m = build_example();
    for (auto _ : state) {
        Connection lc = levi_civita(m);
        benchmark::DoNotOptimize(lc);
    }
}
BENCHMARK(BM_LeviCivitaSymbolic);

void BM_RiemannSymbolic(benchmark::State& state) {
    const AlgebraModel m = build_example();
    const Connection lc = levi_civita(m);
    for (auto _ : state) {
        Tensor R = curvature_tensor(m, lc);
        benchmark::DoNotOptimize(R);
    }
}
BENCHMARK(BM_RiemannSymbolic);

void BM_TorsionAnalysisSymbolic(benchmark::State& state) {
    const AlgebraModel m = build_example();
    const Connection lc = levi_civita(m);
    const Connection np = phib_connection(m, lc);
    for (auto _ : state) {
        TorsionAnalysis analysis = torsion_analysis(m, np);
        benchmark::DoNotOptimize(analysis);
    }
}
BENCHMARK(BM_TorsionAnalysisSymbolic);

void BM_VerifyClaimsSymbolic(benchmark::State& state) {
    for (auto _ : state) {
        Report report = verify_paper_claims();
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_VerifyClaimsSymbolic);

void BM_InstanceIdentitySuite(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const AlgebraModel base = build_example();
    const AlgebraModel m = bind_parameters(base, random_bindings(*base.params(), rng));
    for (auto _ : state) {
        Report report = natural_connection_suite(m);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_InstanceIdentitySuite);

}  // namespace

BENCHMARK_MAIN();
