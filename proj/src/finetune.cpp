#include "actinfo/finetune.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>

namespace actinfo {

namespace {

// Admissibility of a single parameter tuple; shared by the eager grid
// validation and by family_pmf probes.
void check_param(FamilyKind kind, const ParamTuple& xi, double domain_length) {
    if (!std::isfinite(xi[0]) || !std::isfinite(xi[1]))
        throw ValidationError(Errc::ParamOutOfBounds, "parameter tuple is not finite");
    switch (kind) {
        case FamilyKind::TruncatedNormal:
            if (!(xi[1] > 0.0))
                throw ValidationError(Errc::DegenerateScale,
                                      "sd = " + std::to_string(xi[1]) + " must be positive");
            break;
        case FamilyKind::UniformWindow: {
            if (!(xi[1] > 0.0))
                throw ValidationError(Errc::DegenerateScale,
                                      "width = " + std::to_string(xi[1]) + " must be positive");
            const double lo = std::max(0.0, xi[0] - xi[1] / 2.0);
            const double hi = std::min(domain_length, xi[0] + xi[1] / 2.0);
            if (!(hi > lo))
                throw ValidationError(Errc::ParamOutOfBounds,
                                      "window centered at " + std::to_string(xi[0]) +
                                          " does not intersect the domain");
            break;
        }
    }
}

std::vector<std::string> cell_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t k = 0; k < n; ++k) labels[k] = std::to_string(k);
    return labels;
}

}  // namespace

ParamFamily::ParamFamily(FamilyKind kind, double domain_length, double cell_width,
                         std::vector<ParamTuple> grid)
    : kind_(kind), domain_length_(domain_length), grid_(std::move(grid)) {
    if (!(domain_length_ > 0.0) || !std::isfinite(domain_length_))
        throw ValidationError(Errc::BadDomain, "domain length must be positive and finite");
    if (!(cell_width > 0.0) || cell_width > domain_length_)
        throw ValidationError(Errc::BadDomain, "cell width h must satisfy 0 < h <= L");
    const double ratio = domain_length_ / cell_width;
    cells_ = static_cast<std::size_t>(std::llround(ratio));
    if (cells_ < 1 || std::fabs(static_cast<double>(cells_) * cell_width - domain_length_) >
                          1e-9 * std::max(1.0, domain_length_))
        throw ValidationError(Errc::BadDomain, "cell width h must evenly divide L");
    if (grid_.empty())
        throw ValidationError(Errc::BadParamGrid, "hyperparameter grid is empty");
    for (const auto& xi : grid_) check_param(kind_, xi, domain_length_);
}

double ParamFamily::cell_left(std::size_t k) const noexcept {
    return domain_length_ * static_cast<double>(k) / static_cast<double>(cells_);
}

double ParamFamily::cell_center(std::size_t k) const noexcept {
    return domain_length_ * (static_cast<double>(k) + 0.5) / static_cast<double>(cells_);
}

namespace {

// Phi(hi) - Phi(lo) evaluated with erfc on nonnegative arguments only, so
// deep-tail cell masses keep relative accuracy instead of cancelling
// against the CDF's saturation at 1.
double normal_interval_mass(double lo, double hi) noexcept {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    if (lo >= 0.0) return 0.5 * (std::erfc(lo * inv_sqrt2) - std::erfc(hi * inv_sqrt2));
    if (hi <= 0.0) return 0.5 * (std::erfc(-hi * inv_sqrt2) - std::erfc(-lo * inv_sqrt2));
    return 1.0 - 0.5 * std::erfc(hi * inv_sqrt2) - 0.5 * std::erfc(-lo * inv_sqrt2);
}

}  // namespace

FiniteDistribution family_pmf(const ParamFamily& family, const ParamTuple& xi) {
    check_param(family.kind(), xi, family.domain_length());
    const std::size_t n = family.cell_count();
    std::vector<double> probs(n, 0.0);

    switch (family.kind()) {
        case FamilyKind::TruncatedNormal: {
            const double mean = xi[0];
            const double sd = xi[1];
            const double total =
                normal_interval_mass((0.0 - mean) / sd, (family.domain_length() - mean) / sd);
            if (total > 0.0) {
                for (std::size_t k = 0; k < n; ++k) {
                    const double mass = normal_interval_mass(
                        (family.cell_left(k) - mean) / sd, (family.cell_left(k + 1) - mean) / sd);
                    probs[k] = std::max(mass, 0.0) / total;
                }
            } else {
                // mean so far outside [0,L] that the tail mass underflows:
                // everything collapses onto the nearest boundary cell
                probs[mean <= 0.0 ? 0 : n - 1] = 1.0;
            }
            break;
        }
        case FamilyKind::UniformWindow: {
            const double lo = std::max(0.0, xi[0] - xi[1] / 2.0);
            const double hi = std::min(family.domain_length(), xi[0] + xi[1] / 2.0);
            const double total = hi - lo;
            for (std::size_t k = 0; k < n; ++k) {
                const double overlap =
                    std::min(family.cell_left(k + 1), hi) - std::max(family.cell_left(k), lo);
                if (overlap > 0.0) probs[k] = overlap / total;
            }
            break;
        }
    }
    return FiniteDistribution(cell_labels(n), std::move(probs));
}

Event target_event(const ParamFamily& family, double a, double b) {
    if (!(0.0 <= a && a <= b && b <= family.domain_length()))
        throw ValidationError(Errc::TargetIntervalOutOfRange,
                              "target interval [" + std::to_string(a) + "," + std::to_string(b) +
                                  "] not inside [0," + std::to_string(family.domain_length()) +
                                  "]");
    std::vector<std::size_t> cells;
    for (std::size_t k = 0; k < family.cell_count(); ++k) {
        const double c = family.cell_center(k);
        if (c >= a && c <= b) cells.push_back(k);
    }
    if (cells.empty())
        throw ValidationError(Errc::EmptyTarget, "no cell center falls inside the interval");
    return Event(std::move(cells), family.cell_count());
}

TuningOptimum tuning_probability_serial(const ParamFamily& family, const Event& target) {
    TuningOptimum best;
    best.p_max = -1.0;
    for (std::size_t i = 0; i < family.grid().size(); ++i) {
        const double p = event_probability(family_pmf(family, family.grid()[i]), target);
        if (p > best.p_max) {
            best.p_max = p;
            best.xi_index = i;
        }
    }
    best.xi_star = family.grid()[best.xi_index];
    return best;
}

TuningOptimum tuning_probability(const ParamFamily& family, const Event& target) {
    const std::size_t m = family.grid().size();
    std::vector<double> values(m);
    std::exception_ptr error;

    #pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < static_cast<long>(m); ++i) {
        try {
            values[i] =
                event_probability(family_pmf(family, family.grid()[static_cast<std::size_t>(i)]),
                                  target);
        } catch (...) {
            #pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    // grid-index-priority reduction: identical to the serial first-tie-wins scan
    TuningOptimum best;
    best.p_max = -1.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (values[i] > best.p_max) {
            best.p_max = values[i];
            best.xi_index = i;
        }
    }
    best.xi_star = family.grid()[best.xi_index];
    return best;
}

TuningResult fine_tuning_report(const ParamFamily& family, const Event& target, double delta,
                                LogBase base) {
    if (!(delta > 0.0 && delta < 1.0))
        throw ValidationError(Errc::DeltaOutOfRange,
                              "delta = " + std::to_string(delta) + " must lie in (0,1)");
    const TuningOptimum opt = tuning_probability(family, target);

    TuningResult result;
    result.xi_star = opt.xi_star;
    result.p_max = opt.p_max;
    result.delta = delta;
    result.fine_tuned = opt.p_max < delta;
    result.active_info = (opt.p_max == 0.0)
                             ? ExtReal::pos_inf()
                             : ExtReal::finite(base.from_nats(-std::log(opt.p_max)));

    // the threshold comparison must match its active-information form
    // I+ > -log delta (skip the check only in the degenerate near-tie zone)
    const double threshold_nats = -std::log(delta);
    const bool flag_via_info = result.active_info.is_finite()
                                   ? -std::log(opt.p_max) > threshold_nats
                                   : true;
    const bool near_tie =
        opt.p_max > 0.0 && std::fabs(std::log(opt.p_max) - std::log(delta)) <= 1e-12;
    if (!near_tie && flag_via_info != result.fine_tuned)
        throw std::logic_error("fine-tuning flag disagrees with its active-information form");
    return result;
}

}  // namespace actinfo
