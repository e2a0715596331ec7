#include "actinfo/sweep.hpp"

#include <stdexcept>

#include "actinfo/distribution.hpp"
#include "actinfo/measures.hpp"

namespace actinfo {

namespace {

double curve_value(SweepKind kind, double p, LogBase base) {
    const FiniteDistribution dist = FiniteDistribution::bernoulli(p);
    switch (kind) {
        case SweepKind::TotalInfoCurve: return total_information(dist, base).value();
        case SweepKind::EntropyCurve: return entropy(dist, base);
        default: throw std::logic_error("not a curve kind");
    }
}

double surface_value(SweepKind kind, double p, double q, LogBase base) {
    const FiniteDistribution d1 = FiniteDistribution::bernoulli(p);
    const FiniteDistribution d2 = FiniteDistribution::bernoulli(q);
    switch (kind) {
        case SweepKind::CaiSurface: return conserved_active_information(d1, d2, base).value();
        case SweepKind::KlSurface: return kl_divergence(d1, d2, base).value();
        default: throw std::logic_error("not a surface kind");
    }
}

void require_curve(SweepKind kind) {
    if (!is_curve(kind))
        throw ValidationError(Errc::BadSweepGrid, "surface kind passed to a curve sweep");
}

void require_surface(SweepKind kind) {
    if (is_curve(kind))
        throw ValidationError(Errc::BadSweepGrid, "curve kind passed to a surface sweep");
}

}  // namespace

std::vector<CurvePoint> bernoulli_curve_serial(SweepKind kind, const SweepGrid& grid,
                                               LogBase base) {
    require_curve(kind);
    grid.validate();
    std::vector<CurvePoint> rows(grid.steps);
    for (std::size_t i = 0; i < grid.steps; ++i) {
        const double p = grid.point(i);
        rows[i] = {p, curve_value(kind, p, base)};
    }
    return rows;
}

std::vector<CurvePoint> bernoulli_curve(SweepKind kind, const SweepGrid& grid, LogBase base) {
    require_curve(kind);
    grid.validate();
    std::vector<CurvePoint> rows(grid.steps);
    #pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(grid.steps); ++i) {
        const double p = grid.point(static_cast<std::size_t>(i));
        rows[static_cast<std::size_t>(i)] = {p, curve_value(kind, p, base)};
    }
    return rows;
}

std::vector<SurfacePoint> bernoulli_surface_serial(SweepKind kind, const SweepGrid& grid,
                                                   LogBase base) {
    require_surface(kind);
    grid.validate();
    std::vector<SurfacePoint> rows(grid.steps * grid.steps);
    for (std::size_t i = 0; i < grid.steps; ++i) {
        const double p = grid.point(i);
        for (std::size_t j = 0; j < grid.steps; ++j) {
            const double q = grid.point(j);
            rows[i * grid.steps + j] = {p, q, surface_value(kind, p, q, base)};
        }
    }
    return rows;
}

std::vector<SurfacePoint> bernoulli_surface(SweepKind kind, const SweepGrid& grid, LogBase base) {
    require_surface(kind);
    grid.validate();
    const long total = static_cast<long>(grid.steps * grid.steps);
    std::vector<SurfacePoint> rows(static_cast<std::size_t>(total));
    #pragma omp parallel for schedule(static)
    for (long idx = 0; idx < total; ++idx) {
        const std::size_t i = static_cast<std::size_t>(idx) / grid.steps;
        const std::size_t j = static_cast<std::size_t>(idx) % grid.steps;
        const double p = grid.point(i);
        const double q = grid.point(j);
        rows[static_cast<std::size_t>(idx)] = {p, q, surface_value(kind, p, q, base)};
    }
    return rows;
}

}  // namespace actinfo
