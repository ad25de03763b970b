// Compares the OpenMP kernels against their serial reference
// implementations on the two hot paths: unbiasedness verification of a
// complete basis family, and the restarted fiducial search.
#include <benchmark/benchmark.h>

#include "mublab/certifier.hpp"
#include "mublab/gf.hpp"
#include "mublab/groups.hpp"
#include "mublab/mub.hpp"
#include "mublab/parallel.hpp"
#include "mublab/repr.hpp"

using namespace mublab;

namespace {

void bm_verify_unbiased(benchmark::State& state, Execution exec) {
    const MubSet mub = construct_mub(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        UnbiasedReport r = verify_unbiased(mub, 1e-9, exec);
        benchmark::DoNotOptimize(r);
    }
}

void bm_fiducial_search(benchmark::State& state, Execution exec) {
    const FiniteGroup G = FiniteGroup::affine(FieldSpec::create(2, 2));
    const Representation rep = Representation::standard(G);
    const int restarts = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FiducialResult r =
            fiducial_search(rep, restarts, 0, FiducialScope::AllNonidentity, exec);
        benchmark::DoNotOptimize(r);
    }
}

void verify_serial(benchmark::State& s) { bm_verify_unbiased(s, Execution::Serial); }
void verify_parallel(benchmark::State& s) { bm_verify_unbiased(s, Execution::Parallel); }
void fiducial_serial(benchmark::State& s) { bm_fiducial_search(s, Execution::Serial); }
void fiducial_parallel(benchmark::State& s) { bm_fiducial_search(s, Execution::Parallel); }

} // namespace

BENCHMARK(verify_serial)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);
BENCHMARK(verify_parallel)->Arg(31)->Arg(61)->Unit(benchmark::kMillisecond);
BENCHMARK(fiducial_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(fiducial_parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
