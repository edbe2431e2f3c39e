#include <benchmark/benchmark.h>

#include "vopkit/vorth.hpp"

using namespace vopkit;

namespace {

ModifierPoly quadratic() {
    return ModifierPoly({Rational(1, 2), Rational(1, 4)});
}

void BM_Compose(benchmark::State& state) {
    const DiffOp g = build_g(Rational(1, 2));
    DiffOp acc = DiffOp::identity();
    for (int i = 0; i < state.range(0); ++i) acc = compose(acc, g);
    const DiffOp x = build(OpKind::MulX);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(acc, x));
    }
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(4)->Arg(8);

void BM_Commutator(benchmark::State& state) {
    const DiffOp g = op_pow(build_g(Rational(1, 2)), static_cast<int>(state.range(0)));
    const DiffOp x = build(OpKind::MulX);
    for (auto _ : state) {
        benchmark::DoNotOptimize(commutator(g, x));
    }
}
BENCHMARK(BM_Commutator)->Arg(1)->Arg(2)->Arg(4);

void BM_ExpApplyMember(benchmark::State& state) {
    const DiffOp exponent = quadratic().at(build_g(Rational(1, 2)));
    const int n = static_cast<int>(state.range(0));
    const Poly f = falling_factorial(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(exp_apply(exponent, f));
    }
}
BENCHMARK(BM_ExpApplyMember)->Arg(4)->Arg(8)->Arg(16);

void BM_GenerateFamily(benchmark::State& state) {
    const FamilySpec spec = FamilySpec::meixner_type(quadratic(), Rational(1), Rational(1, 2),
                                                     static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate(spec));
    }
}
BENCHMARK(BM_GenerateFamily)->Arg(8)->Arg(12);

void BM_RecursionTable(benchmark::State& state) {
    const PolyFamily fam = generate(FamilySpec::meixner_type(
        quadratic(), Rational(1), Rational(1, 2), static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(recursion_table(fam));
    }
}
BENCHMARK(BM_RecursionTable)->Arg(8)->Arg(12);

void BM_MaroniGrid(benchmark::State& state) {
    const PolyFamily fam = generate(FamilySpec::charlier_appell(
        ModifierPoly({Rational(-1), Rational(1)}), static_cast<int>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(maroni_check(fam, 2));
    }
}
BENCHMARK(BM_MaroniGrid)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
