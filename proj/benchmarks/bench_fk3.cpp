#include "fk3/cleft.hpp"
#include "fk3/fk3.hpp"
#include "fk3/forms.hpp"
#include "fk3/hochschild.hpp"
#include "fk3/properties.hpp"
#include "fk3/smash.hpp"

#include <benchmark/benchmark.h>

using namespace fk3;

namespace {

std::vector<Rational> no_values() { return std::vector<Rational>(kMaxVars); }

void BM_PolyMultiply(benchmark::State& state) {
    const ContextPtr ctx = copointed_context();
    const Poly a = Poly::var(ctx, "c0") + Poly::var(ctx, "c1") * Rational(2, 3) + Poly(ctx, 5);
    const Poly b = a.pow(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(b * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(2)->Arg(4)->Arg(8);

void BM_SigmaFromSection(benchmark::State& state) {
    const CleftParams p = state.range(0) == 0 ? CleftParams::pointed_symbolic() : CleftParams::copointed_symbolic();
    const CleftObject e(p, realization_for(p));
    for (auto _ : state) benchmark::DoNotOptimize(sigma_from_section(e));
}
BENCHMARK(BM_SigmaFromSection)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ConvolutionInverse(benchmark::State& state) {
    const CleftParams p = CleftParams::pointed_symbolic();
    const Realization r = realization_for(p);
    const BiFunctional s = sigma_from_section(CleftObject(p, r));
    for (auto _ : state) benchmark::DoNotOptimize(convolution_inverse(yd_for(r), s));
}
BENCHMARK(BM_ConvolutionInverse)->Unit(benchmark::kMillisecond);

void BM_HochschildExponential(benchmark::State& state) {
    const Realization r = Realization::pointed();
    const HochschildForm eta = symbolic_invariant_cocycle(r);
    for (auto _ : state) benchmark::DoNotOptimize(hochschild_exponential(r, eta));
}
BENCHMARK(BM_HochschildExponential)->Unit(benchmark::kMillisecond);

// Full 72^3 cocycle sweep at one numeric point.
void BM_NumericCocycleSweep(benchmark::State& state) {
    const Realization r = state.range(0) == 0 ? Realization::pointed() : Realization::copointed();
    const CleftParams p = r.is_pointed() ? CleftParams::pointed(Rational(5, 2), Rational(-4, 3))
                                         : CleftParams::copointed(Rational(2), Rational(-1, 3), Rational(3, 4));
    const SmashAlgebra a(r);
    const SmashForm<Rational> s = evaluate_form(extend_cocycle(a, sigma_from_section(CleftObject(p, r))), no_values());
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf_cocycle(a, s));
}
BENCHMARK(BM_NumericCocycleSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_SymbolicCocycleDegree6(benchmark::State& state) {
    const CleftParams p = CleftParams::copointed_symbolic();
    const Realization r = realization_for(p);
    const SmashAlgebra a(r);
    const SmashForm<Poly> s = extend_cocycle(a, sigma_from_section(CleftObject(p, r)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf_cocycle(a, s, 6));
}
BENCHMARK(BM_SymbolicCocycleDegree6)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_InvariantCocycles(benchmark::State& state) {
    const Realization r = Realization::copointed();
    for (auto _ : state) benchmark::DoNotOptimize(invariant_cocycles(r));
}
BENCHMARK(BM_InvariantCocycles)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
    const CleftParams p = CleftParams::pointed(Rational(3), Rational(1));
    const Realization r = realization_for(p);
    for (auto _ : state) benchmark::DoNotOptimize(classify_purity(p, r));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
