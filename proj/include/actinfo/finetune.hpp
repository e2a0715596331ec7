// Fine-tuning estimation: a parametric family of distributions on a
// discretized interval [0, L], a target subinterval, and an exhaustive
// search for the hyperparameter that maximizes the target probability. The
// supremum p_max is the degree of tuning; the system is fine-tuned to level
// delta when p_max < delta, equivalently when the active information
// -log p_max exceeds -log delta.

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "actinfo/distribution.hpp"
#include "actinfo/ext_real.hpp"
#include "actinfo/log_base.hpp"

namespace actinfo {

enum class FamilyKind {
    TruncatedNormal,  // parameters (mean, sd); mass from CDF differences, renormalized to [0,L]
    UniformWindow,    // parameters (center, width); cell mass from overlap fractions
};

// Parameter tuple: (mean, sd) or (center, width).
using ParamTuple = std::array<double, 2>;

class ParamFamily {
  public:
    // The cell width h must evenly divide L; every grid tuple is validated
    // eagerly (positive scale, window intersecting the domain).
    ParamFamily(FamilyKind kind, double domain_length, double cell_width,
                std::vector<ParamTuple> grid);

    FamilyKind kind() const noexcept { return kind_; }
    double domain_length() const noexcept { return domain_length_; }
    double cell_width() const noexcept { return domain_length_ / static_cast<double>(cells_); }
    std::size_t cell_count() const noexcept { return cells_; }
    const std::vector<ParamTuple>& grid() const noexcept { return grid_; }

    double cell_left(std::size_t k) const noexcept;
    double cell_center(std::size_t k) const noexcept;

  private:
    FamilyKind kind_;
    double domain_length_;
    std::size_t cells_;
    std::vector<ParamTuple> grid_;
};

// The discretized PMF of the family member xi over the cell grid. xi need
// not belong to the declared grid, but must be admissible (positive scale;
// window overlapping the domain).
FiniteDistribution family_pmf(const ParamFamily& family, const ParamTuple& xi);

// Cells whose centers lie in [a, b] (inclusive), as an event on the cell
// space. Errors when no cell qualifies.
Event target_event(const ParamFamily& family, double a, double b);

struct TuningOptimum {
    ParamTuple xi_star{};
    std::size_t xi_index = 0;
    double p_max = 0.0;
};

// Exhaustive maximization of P(T; xi) over the grid; ties broken by the
// first tuple in grid order. The OpenMP version evaluates the grid in
// parallel and reduces with grid-index priority, so its result is identical
// to the serial one.
TuningOptimum tuning_probability(const ParamFamily& family, const Event& target);
TuningOptimum tuning_probability_serial(const ParamFamily& family, const Event& target);

struct TuningResult {
    ParamTuple xi_star{};
    double p_max = 0.0;
    double delta = 0.0;
    bool fine_tuned = false;
    ExtReal active_info;  // -log p_max in the display base
};

// Runs the grid search and applies the threshold delta in (0,1). The flag
// computed from p_max < delta is cross-checked against the equivalent
// active-information form.
TuningResult fine_tuning_report(const ParamFamily& family, const Event& target, double delta,
                                LogBase base = LogBase());

}  // namespace actinfo
