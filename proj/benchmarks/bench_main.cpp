#include <benchmark/benchmark.h>

#include <random>

#include "symchar2/bilinear.hpp"
#include "symchar2/parse.hpp"
#include "symchar2/realizer.hpp"

using namespace symchar2;

static void BM_GaussReduceGF4(benchmark::State& state) {
    const Field k = Field::binary(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    Matrix a(k, n, n);
    do {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = k.from_bits(static_cast<std::uint32_t>(rng() & 3u));
    } while (rank(a) < n);
    const Matrix s = a.transpose() * a;
    for (auto _ : state) benchmark::DoNotOptimize(gauss_reduce(s));
}
BENCHMARK(BM_GaussReduceGF4)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_RealizeFunctionField(benchmark::State& state) {
    const Field k = Field::parse("f2(t)");
    const char* inputs[] = {"(x^2+x+t)^3", "(x^2+t)^3", "(x^2+t)^2*(x^4+t)", "(x^3+x+t)*(x^4+t)"};
    const char* text = inputs[state.range(0)];
    const auto claimed = parse_factored(k, text);
    Poly f = Poly::one(k);
    for (const auto& c : claimed) f = f * pow(c.factor, c.multiplicity);
    const auto fd = validate_factored_input(f, claimed);
    for (auto _ : state) benchmark::DoNotOptimize(realize(f, fd));
    state.SetLabel(text);
}
BENCHMARK(BM_RealizeFunctionField)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_FactorGF256(benchmark::State& state) {
    const Field k = Field::binary(8);
    std::mt19937_64 rng(7);
    std::vector<Scalar> c;
    for (int i = 0; i < state.range(0); ++i) c.push_back(k.from_bits(static_cast<std::uint32_t>(rng() & 255u)));
    c.push_back(k.one());
    const Poly f(k, std::move(c));
    for (auto _ : state) benchmark::DoNotOptimize(factor(f));
}
BENCHMARK(BM_FactorGF256)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_RealizeGF2(benchmark::State& state) {
    const Field k = Field::gf2();
    const Poly f = parse_poly(k, "(x^3+x+1)^2*(x^2+x+1)^3*(x+1)^2");
    const auto fd = factor(f);
    for (auto _ : state) benchmark::DoNotOptimize(realize(f, fd));
}
BENCHMARK(BM_RealizeGF2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
