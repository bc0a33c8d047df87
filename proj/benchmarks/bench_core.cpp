#include <benchmark/benchmark.h>

#include <vector>

#include "superconic/oracle.hpp"
#include "superconic/oval.hpp"
#include "superconic/resolvent.hpp"
#include "superconic/solution.hpp"

using namespace superconic;

namespace {

OvalParams c1() {
    return std::get<OvalParams>(validate_params(1.5, 0.3, 0.26, 0.6));
}

void BM_ClassifyAndRoot(benchmark::State& state) {
    const OvalParams p = c1();
    const ResolventCoeffs rc = resolvent_coeffs(p);
    double y = 0.0;
    for (auto _ : state) {
        y = y < 0.5 ? y + 1e-3 : 0.0;
        const CubicClassification cls = classify(rc.at(y));
        benchmark::DoNotOptimize(cubic_root(cls, LambdaBranch::TrigA, rc.a, rc.b.at(y)));
    }
}
BENCHMARK(BM_ClassifyAndRoot);

void BM_Evaluate(benchmark::State& state) {
    const OvalParams p = c1();
    const BranchPlan plan = build_branch_plan(p, 2.0);
    double y = 0.0;
    for (auto _ : state) {
        y = y < 1.9 ? y + 1e-3 : 0.0;
        benchmark::DoNotOptimize(evaluate(p, plan, y));
    }
}
BENCHMARK(BM_Evaluate);

void BM_EvaluateGrid(benchmark::State& state) {
    const OvalParams p = c1();
    const BranchPlan plan = build_branch_plan(p, 2.0);
    std::vector<double> ys(state.range(0));
    for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = 2.0 * double(i) / double(ys.size() - 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_grid(p, plan, ys));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvaluateGrid)->Arg(128)->Arg(1024);

void BM_BranchPlan(benchmark::State& state) {
    const OvalParams p = c1();
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_branch_plan(p, 2.0));
    }
}
BENCHMARK(BM_BranchPlan);

void BM_DiscPositiveRoots(benchmark::State& state) {
    const OvalParams p = c1();
    for (auto _ : state) {
        benchmark::DoNotOptimize(disc_positive_roots(p));
    }
}
BENCHMARK(BM_DiscPositiveRoots);

void BM_QuarticRootsNumeric(benchmark::State& state) {
    const OvalParams p = c1();
    for (auto _ : state) {
        benchmark::DoNotOptimize(quartic_roots_numeric(p, 0.3));
    }
}
BENCHMARK(BM_QuarticRootsNumeric);

}  // namespace

BENCHMARK_MAIN();
