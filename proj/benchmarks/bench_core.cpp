#include <benchmark/benchmark.h>

#include <sfn/curves.hpp>
#include <sfn/field.hpp>
#include <sfn/schwarz.hpp>

namespace {

using namespace sfn;

const SchwarzApprox& ellipse_model() {
    static SchwarzApprox s = [] {
        Curve c = make_curve(CurveKind::rho_ellipse, 2.0);
        return fit_schwarz(sample_uniform(c, 100));
    }();
    return s;
}

void BM_EllipseFit(benchmark::State& state) {
    Curve c = make_curve(CurveKind::rho_ellipse, 2.0);
    SampleSet samples = sample_uniform(c, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        SchwarzApprox s = fit_schwarz(samples);
        benchmark::DoNotOptimize(s.fit.final_rel_error);
    }
}
BENCHMARK(BM_EllipseFit)->Arg(100)->Arg(200);

void BM_Evaluate(benchmark::State& state) {
    const SchwarzApprox& s = ellipse_model();
    cplx z(0.7, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(s.rat, z));
        z += cplx(1e-9, 1e-9);
    }
}
BENCHMARK(BM_Evaluate);

void BM_PolesAndResidues(benchmark::State& state) {
    const SchwarzApprox& s = ellipse_model();
    for (auto _ : state) {
        PoleReport rep = poles_and_residues(s.rat);
        benchmark::DoNotOptimize(rep.poles.data());
    }
}
BENCHMARK(BM_PolesAndResidues);

void BM_InvolutionField(benchmark::State& state) {
    const SchwarzApprox& s = ellipse_model();
    const int n = static_cast<int>(state.range(0));
    GridSpec spec{-2.5, 2.5, -2.5, 2.5, n, n};
    for (auto _ : state) {
        FieldGrid g =
            evaluate_field(s, FieldMetric::involution, spec, 1e-8, 1e-1);
        benchmark::DoNotOptimize(g.values.data());
    }
}
BENCHMARK(BM_InvolutionField)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
