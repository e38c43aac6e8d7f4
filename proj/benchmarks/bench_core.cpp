#include <benchmark/benchmark.h>

#include <random>

#include "semiostat/context.hpp"
#include "semiostat/equiv.hpp"
#include "semiostat/fincat.hpp"
#include "semiostat/scalar_dynamics.hpp"

namespace {

using namespace semiostat;

equiv::QuotientSystem make_system(int states, std::mt19937& rng) {
    equiv::QuotientSystem sys;
    for (int i = 0; i < states; ++i) sys.states.push_back("s" + std::to_string(i));
    std::uniform_int_distribution<int> pick(0, states - 1);
    for (const auto& s : sys.states) {
        sys.f[s] = sys.states[std::size_t(pick(rng))];
        sys.F[s] = sys.states[std::size_t(pick(rng))];
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < states / 3; ++i)
        pairs.emplace_back(sys.states[std::size_t(pick(rng))],
                           sys.states[std::size_t(pick(rng))]);
    sys.partition = equiv::make_partition(sys.states, pairs);
    return sys;
}

void BM_CertifyCompatibility(benchmark::State& state) {
    std::mt19937 rng(7);
    const auto sys = make_system(int(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(equiv::certify_compatibility(sys));
}
BENCHMARK(BM_CertifyCompatibility)->Arg(12)->Arg(64)->Arg(256);

void BM_CheckChainCategory(benchmark::State& state) {
    std::vector<std::string> elems;
    for (int i = 0; i < state.range(0); ++i) elems.push_back("c" + std::to_string(i));
    const auto category = fincat::poset_as_category(ContextPoset::chain(elems));
    for (auto _ : state) benchmark::DoNotOptimize(fincat::check_category(category));
}
BENCHMARK(BM_CheckChainCategory)->Arg(4)->Arg(8)->Arg(12);

void BM_ScalarIterate(benchmark::State& state) {
    scalar::ScalarParams params{0.8, 0.5};
    params.epsilon = 1e-12;
    for (auto _ : state) benchmark::DoNotOptimize(scalar::iterate(params, 3.0));
}
BENCHMARK(BM_ScalarIterate);

void BM_HeytingImplication(benchmark::State& state) {
    std::vector<std::string> elems;
    for (int i = 0; i < state.range(0); ++i) elems.push_back("c" + std::to_string(i));
    const auto poset = ContextPoset::chain(elems);
    const context::HeytingAlgebra alg(poset);
    std::set<std::string> half(elems.begin(), elems.begin() + elems.size() / 2);
    const context::Downset a(poset, half);
    const context::Downset b(poset, {elems.front()});
    for (auto _ : state) benchmark::DoNotOptimize(alg.implies(a, b));
}
BENCHMARK(BM_HeytingImplication)->Arg(5)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
