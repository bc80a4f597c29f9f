#include "gpforge/engine.hpp"
#include "gpforge/ito.hpp"
#include "gpforge/model_families.hpp"
#include "gpforge/normalize.hpp"
#include "gpforge/slice.hpp"
#include "gpforge/table_algebra.hpp"
#include "gpforge/transforms.hpp"
#include "gpforge/variety.hpp"

#include <benchmark/benchmark.h>

using namespace gpforge;

namespace {

void BM_NormalizeAxioms(benchmark::State& state)
{
	Variety v = builtin("GP-and-TP");
	for (auto _ : state)
		for (const auto& ax : v.axioms())
			benchmark::DoNotOptimize(normalize(ax.poly, v.signature()));
}
BENCHMARK(BM_NormalizeAxioms);

// slice over {mul, br, D} in degree 3, weight W
void BM_EnumerateBasis(benchmark::State& state)
{
	Variety v = builtin("Poisson");
	int w = static_cast<int>(state.range(0));
	std::size_t size = 0;
	for (auto _ : state) {
		auto b = enumerate_basis(3, w, v.signature());
		size = b.size();
		benchmark::DoNotOptimize(size);
	}
	state.counters["terms"] = static_cast<double>(size);
}
BENCHMARK(BM_EnumerateBasis)->DenseRange(0, 3);

void BM_DeriveTransposedFromGP(benchmark::State& state)
{
	Variety gp = builtin("GeneralizedPoisson");
	Poly tp = builtin("TransposedPoisson").find_axiom("tp")->poly;
	for (auto _ : state)
		benchmark::DoNotOptimize(derive(tp, gp, 3, 1));
}
BENCHMARK(BM_DeriveTransposedFromGP)->Unit(benchmark::kMillisecond);

void BM_ImplicationPoissonToTP(benchmark::State& state)
{
	Variety from = builtin("Poisson");
	Variety to = builtin("TransposedPoisson");
	for (auto _ : state)
		benchmark::DoNotOptimize(check_implication(from, to, 0, 1));
}
BENCHMARK(BM_ImplicationPoissonToTP)->Unit(benchmark::kMillisecond);

void BM_CheckAxiomsDerivedBracket(benchmark::State& state)
{
	TableAlgebra m = derived_bracket(truncated_poly(static_cast<int>(state.range(0))));
	Variety v = builtin("GP-and-TP");
	for (auto _ : state)
		benchmark::DoNotOptimize(check_axioms(m, v));
}
BENCHMARK(BM_CheckAxiomsDerivedBracket)->Arg(3)->Arg(5)->Arg(8);

void BM_ItoSingleModel(benchmark::State& state)
{
	TableAlgebra m = derived_bracket(random_commassoc_der(4, 0.3, 7));
	for (auto _ : state)
		benchmark::DoNotOptimize(run_ito("r", m, false));
}
BENCHMARK(BM_ItoSingleModel)->Unit(benchmark::kMillisecond);

void BM_ItoPool(benchmark::State& state)
{
	int count = static_cast<int>(state.range(0));
	for (auto _ : state)
		benchmark::DoNotOptimize(run_ito_pool(count, 1, false));
}
BENCHMARK(BM_ItoPool)->Arg(20)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
