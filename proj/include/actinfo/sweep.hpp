// Grid sweeps over Bernoulli parameters, producing the data behind the
// standard curve and surface plots: total information and entropy of Ber(p),
// and the conserved-active-information / KL surfaces of (Ber(p), Ber(q)).
// Each grid point is independent, so the OpenMP kernels produce output
// bit-identical to the serial references regardless of scheduling.

#pragma once

#include <cstddef>
#include <vector>

#include "actinfo/errors.hpp"
#include "actinfo/log_base.hpp"

namespace actinfo {

enum class SweepKind { TotalInfoCurve, EntropyCurve, CaiSurface, KlSurface };

constexpr bool is_curve(SweepKind kind) noexcept {
    return kind == SweepKind::TotalInfoCurve || kind == SweepKind::EntropyCurve;
}

// Inclusive linear grid on an open subinterval of (0,1).
struct SweepGrid {
    double min = 0.0;
    double max = 0.0;
    std::size_t steps = 0;

    void validate() const {
        if (!(0.0 < min && min < max && max < 1.0) || steps < 2)
            throw ValidationError(Errc::BadSweepGrid,
                                  "need 0 < min < max < 1 and steps >= 2");
    }

    double point(std::size_t i) const noexcept {
        const double s = static_cast<double>(steps - 1);
        return (min * (s - static_cast<double>(i)) + max * static_cast<double>(i)) / s;
    }
};

struct SweepSpec {
    SweepKind kind = SweepKind::TotalInfoCurve;
    SweepGrid grid;
    LogBase base;
};

struct CurvePoint {
    double p = 0.0;
    double value = 0.0;
};

struct SurfacePoint {
    double p = 0.0;
    double q = 0.0;
    double value = 0.0;
};

// kind must be a curve kind / surface kind respectively.
std::vector<CurvePoint> bernoulli_curve(SweepKind kind, const SweepGrid& grid,
                                        LogBase base = LogBase());
std::vector<CurvePoint> bernoulli_curve_serial(SweepKind kind, const SweepGrid& grid,
                                               LogBase base = LogBase());
std::vector<SurfacePoint> bernoulli_surface(SweepKind kind, const SweepGrid& grid,
                                            LogBase base = LogBase());
std::vector<SurfacePoint> bernoulli_surface_serial(SweepKind kind, const SweepGrid& grid,
                                                   LogBase base = LogBase());

}  // namespace actinfo
