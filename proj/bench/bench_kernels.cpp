// Timings for the OpenMP kernels against their serial references. Each pair
// must produce identical output; this reports wall times, speedups, and the
// largest observed difference (expected to be exactly zero).

#include <cmath>
#include <cstdio>
#include <omp.h>
#include <vector>

#include "actinfo/finetune.hpp"
#include "actinfo/sweep.hpp"

using namespace actinfo;

namespace {

struct Timing {
    double serial_s;
    double parallel_s;
    double max_diff;
};

void report(const char* name, const Timing& t) {
    std::printf("%-28s  serial %8.3f s   parallel %8.3f s   speedup %5.2fx   max diff %g\n",
                name, t.serial_s, t.parallel_s, t.serial_s / t.parallel_s, t.max_diff);
}

Timing bench_surface(SweepKind kind, std::size_t steps) {
    const SweepGrid grid{0.001, 0.999, steps};
    const double t0 = omp_get_wtime();
    const auto serial = bernoulli_surface_serial(kind, grid);
    const double t1 = omp_get_wtime();
    const auto parallel = bernoulli_surface(kind, grid);
    const double t2 = omp_get_wtime();

    double diff = 0.0;
    for (std::size_t i = 0; i < serial.size(); ++i)
        diff = std::max(diff, std::fabs(serial[i].value - parallel[i].value));
    return {t1 - t0, t2 - t1, diff};
}

Timing bench_curve(SweepKind kind, std::size_t steps) {
    const SweepGrid grid{0.001, 0.999, steps};
    const double t0 = omp_get_wtime();
    const auto serial = bernoulli_curve_serial(kind, grid);
    const double t1 = omp_get_wtime();
    const auto parallel = bernoulli_curve(kind, grid);
    const double t2 = omp_get_wtime();

    double diff = 0.0;
    for (std::size_t i = 0; i < serial.size(); ++i)
        diff = std::max(diff, std::fabs(serial[i].value - parallel[i].value));
    return {t1 - t0, t2 - t1, diff};
}

Timing bench_grid_search(std::size_t grid_points, std::size_t cells) {
    std::vector<ParamTuple> grid;
    grid.reserve(grid_points);
    for (std::size_t k = 0; k < grid_points; ++k)
        grid.push_back({10.0 * static_cast<double>(k) / static_cast<double>(grid_points - 1),
                        0.8});
    const ParamFamily family(FamilyKind::TruncatedNormal, 10.0,
                             10.0 / static_cast<double>(cells), std::move(grid));
    const Event target = target_event(family, 4.0, 4.5);

    const double t0 = omp_get_wtime();
    const auto serial = tuning_probability_serial(family, target);
    const double t1 = omp_get_wtime();
    const auto parallel = tuning_probability(family, target);
    const double t2 = omp_get_wtime();

    const double diff = std::fabs(serial.p_max - parallel.p_max) +
                        (serial.xi_index == parallel.xi_index ? 0.0 : 1.0);
    return {t1 - t0, t2 - t1, diff};
}

}  // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    report("cai surface 1200x1200", bench_surface(SweepKind::CaiSurface, 1200));
    report("kl surface 1200x1200", bench_surface(SweepKind::KlSurface, 1200));
    report("total-info curve 2e6", bench_curve(SweepKind::TotalInfoCurve, 2'000'000));
    report("grid search 4000x500", bench_grid_search(4000, 500));
    return 0;
}
