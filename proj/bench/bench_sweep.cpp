// Serial reference kernel vs OpenMP kernel on the grid sweeps that dominate
// the geometry and Bloch workloads.  Also confirms the two agree bitwise.

#include <chrono>
#include <cstdio>
#include <omp.h>

#include "fracops/bloch.hpp"
#include "fracops/geometry.hpp"

using namespace fracops;

namespace {

template <class F>
double best_of(int reps, F&& f)
{
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool equal)
{
    std::printf("%-28s serial %8.4f s  parallel %8.4f s  speedup %5.2fx  %s\n", name, serial, parallel,
                serial / parallel, equal ? "bitwise-equal" : "MISMATCH");
}

} // namespace

int main()
{
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
    const int reps = 3;

    {
        const auto grid = DiskGrid::geometry_default();
        const auto koebe = builtin_series(kind::KoebePower{2.0}, order_for_radius(grid.radii.back()));
        ScreenResult a, b;
        const double ts = best_of(reps, [&] { a = starlike_order(koebe, 0.0, grid, Execution::serial); });
        const double tp = best_of(reps, [&] { b = starlike_order(koebe, 0.0, grid, Execution::parallel); });
        report("starlike, Koebe N~4900", ts, tp, a.min_value == b.min_value && a.passed == b.passed);
    }
    {
        const auto grid = bloch_refined_grid();
        const auto f = builtin_series(kind::ExpTimesZ{}, 256);
        BlochEstimate a, b;
        const double ts = best_of(reps, [&] { a = bloch_norm_weighted(f, 1.0, WeightSpec::logarithmic(), grid, Execution::serial); });
        const double tp = best_of(reps, [&] { b = bloch_norm_weighted(f, 1.0, WeightSpec::logarithmic(), grid, Execution::parallel); });
        report("weighted Bloch, refined grid", ts, tp,
               a.norm_estimate == b.norm_estimate && a.radius_profile == b.radius_profile);
    }
    return 0;
}
