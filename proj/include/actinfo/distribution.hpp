// Finite discrete probability distributions and events over their outcome
// spaces: construction with validation, product spaces, coarsening to a
// binary partition, merging two spaces onto a common label set, and
// superlevel-set events of a score function.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "actinfo/errors.hpp"

namespace actinfo {

// A validated probability mass function over a labeled finite outcome space.
// Immutable after construction. Entries may be zero; negative entries above
// -1e-12 are treated as rounding noise and clamped to zero, anything lower is
// rejected. The total mass must be 1 within 1e-9; nothing is ever
// renormalized silently.
class FiniteDistribution {
  public:
    FiniteDistribution(std::vector<std::string> labels, std::vector<double> probs);

    // Uniform distribution on n outcomes labeled "0".."n-1".
    static FiniteDistribution uniform(std::size_t n);

    // Two-point distribution on labels {"0","1"} with P(1) = p.
    static FiniteDistribution bernoulli(double p);

    std::size_t size() const noexcept { return probs_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<double>& probs() const noexcept { return probs_; }

    double prob(std::size_t i) const {
        if (i >= probs_.size())
            throw ValidationError(Errc::IndexOutOfBounds, "outcome index " + std::to_string(i));
        return probs_[i];
    }

    bool fully_supported() const noexcept;
    bool same_labels(const FiniteDistribution& other) const noexcept;

    // Explicitly requested renormalization (e.g. after long walk iterations).
    FiniteDistribution normalized() const;

  private:
    std::vector<std::string> labels_;
    std::vector<double> probs_;
};

// A subset of outcome indices of a space of a known size. Indices are kept
// sorted and deduplicated.
class Event {
  public:
    Event(std::vector<std::size_t> indices, std::size_t space_size);

    static Event empty(std::size_t space_size) { return Event({}, space_size); }
    static Event full(std::size_t space_size);

    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    std::size_t space_size() const noexcept { return space_size_; }
    std::size_t count() const noexcept { return indices_.size(); }
    bool is_empty() const noexcept { return indices_.empty(); }

    Event complement() const;
    bool contains(std::size_t i) const noexcept;

  private:
    std::vector<std::size_t> indices_;
    std::size_t space_size_;
};

// Independent product of the components; outcomes ordered lexicographically
// with the first component most significant. A single component is returned
// unchanged. The product space is capped at 10^7 outcomes.
FiniteDistribution product(const std::vector<FiniteDistribution>& components);

// Index set of the Cartesian product of per-component events, in the same
// lexicographic outcome order that product() uses.
Event product_event(const std::vector<Event>& components);

// P(A). Requires the event to live on a space of the distribution's size.
double event_probability(const FiniteDistribution& dist, const Event& event);

// Projection onto the binary partition {T, Tc}: a two-outcome distribution
// with labels ["T","Tc"] and masses [P(T), 1-P(T)].
FiniteDistribution coarsen(const FiniteDistribution& dist, const Event& target);

// Extends both distributions to the sorted union of their label sets,
// assigning zero mass to outcomes a distribution did not originally carry.
// Every event of either original space keeps its probability.
std::pair<FiniteDistribution, FiniteDistribution> merge_spaces(const FiniteDistribution& p1,
                                                               const FiniteDistribution& p2);

// The superlevel set {x : f(x) >= f0} as an event on a space of
// f_values.size() outcomes.
Event specification_event(std::span<const double> f_values, double f0);

// Translates an event expressed in one label order into another space that
// contains the same labels (used after merge_spaces).
Event remap_event(const Event& event, const std::vector<std::string>& from_labels,
                  const FiniteDistribution& to);

}  // namespace actinfo
