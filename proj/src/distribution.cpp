#include "actinfo/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <unordered_map>
#include <unordered_set>

namespace actinfo {

namespace {

constexpr double kNegativeMassTol = 1e-12;
constexpr double kNormalizationTol = 1e-9;
constexpr std::size_t kProductSpaceCap = 10'000'000;

}  // namespace

FiniteDistribution::FiniteDistribution(std::vector<std::string> labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
    if (labels_.size() != probs_.size())
        throw ValidationError(Errc::LengthMismatch,
                              "labels (" + std::to_string(labels_.size()) + ") and probs (" +
                                  std::to_string(probs_.size()) + ") differ in length");
    if (probs_.empty())
        throw ValidationError(Errc::EmptySpace, "a distribution needs at least one outcome");

    double sum = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        double& p = probs_[i];
        if (!std::isfinite(p))
            throw ValidationError(Errc::NotNormalized,
                                  "probs[" + std::to_string(i) + "] is not a finite number");
        if (p < -kNegativeMassTol)
            throw ValidationError(Errc::NegativeMass, "probs[" + std::to_string(i) + "] = " +
                                                          std::to_string(p) + " is negative");
        if (p < 0.0) p = 0.0;  // rounding noise
        sum += p;
    }
    if (std::fabs(sum - 1.0) > kNormalizationTol)
        throw ValidationError(Errc::NotNormalized,
                              "probs sum to " + std::to_string(sum) + ", expected 1");

    std::unordered_set<std::string> seen;
    seen.reserve(labels_.size());
    for (const auto& label : labels_)
        if (!seen.insert(label).second)
            throw ValidationError(Errc::DuplicateLabel, "label \"" + label + "\" appears twice");
}

FiniteDistribution FiniteDistribution::uniform(std::size_t n) {
    if (n == 0) throw ValidationError(Errc::EmptySpace, "uniform distribution needs n >= 1");
    std::vector<std::string> labels(n);
    std::vector<double> probs(n, 1.0 / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return FiniteDistribution(std::move(labels), std::move(probs));
}

FiniteDistribution FiniteDistribution::bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ValidationError(Errc::NotNormalized,
                              "Bernoulli parameter " + std::to_string(p) + " outside [0,1]");
    return FiniteDistribution({"0", "1"}, {1.0 - p, p});
}

bool FiniteDistribution::fully_supported() const noexcept {
    return std::all_of(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; });
}

bool FiniteDistribution::same_labels(const FiniteDistribution& other) const noexcept {
    return this == &other || labels_ == other.labels_;
}

FiniteDistribution FiniteDistribution::normalized() const {
    double sum = 0.0;
    for (double p : probs_) sum += p;
    std::vector<double> scaled(probs_.size());
    for (std::size_t i = 0; i < probs_.size(); ++i) scaled[i] = probs_[i] / sum;
    return FiniteDistribution(labels_, std::move(scaled));
}

Event::Event(std::vector<std::size_t> indices, std::size_t space_size)
    : indices_(std::move(indices)), space_size_(space_size) {
    if (space_size_ == 0) throw ValidationError(Errc::EmptySpace, "event on an empty space");
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    if (!indices_.empty() && indices_.back() >= space_size_)
        throw ValidationError(Errc::IndexOutOfBounds,
                              "event index " + std::to_string(indices_.back()) +
                                  " outside space of size " + std::to_string(space_size_));
}

Event Event::full(std::size_t space_size) {
    std::vector<std::size_t> all(space_size);
    for (std::size_t i = 0; i < space_size; ++i) all[i] = i;
    return Event(std::move(all), space_size);
}

Event Event::complement() const {
    std::vector<std::size_t> rest;
    rest.reserve(space_size_ - indices_.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < space_size_; ++i) {
        if (next < indices_.size() && indices_[next] == i)
            ++next;
        else
            rest.push_back(i);
    }
    return Event(std::move(rest), space_size_);
}

bool Event::contains(std::size_t i) const noexcept {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

FiniteDistribution product(const std::vector<FiniteDistribution>& components) {
    if (components.empty())
        throw ValidationError(Errc::EmptySpace, "product needs at least one component");
    if (components.size() == 1) return components.front();

    std::size_t total = 1;
    for (const auto& c : components) {
        if (c.size() > kProductSpaceCap / total)
            throw ValidationError(Errc::ProductSpaceTooLarge,
                                  "product space exceeds " + std::to_string(kProductSpaceCap) +
                                      " outcomes");
        total *= c.size();
    }

    std::vector<std::string> labels(total);
    std::vector<double> probs(total, 1.0);
    // Lexicographic order, first component most significant.
    std::size_t block = total;
    for (const auto& c : components) {
        block /= c.size();
        for (std::size_t i = 0; i < total; ++i) {
            const std::size_t which = (i / block) % c.size();
            probs[i] *= c.probs()[which];
            std::string& lab = labels[i];
            lab += lab.empty() ? "(" : ",";
            lab += c.labels()[which];
        }
    }
    for (auto& lab : labels) lab += ")";
    return FiniteDistribution(std::move(labels), std::move(probs));
}

Event product_event(const std::vector<Event>& components) {
    if (components.empty())
        throw ValidationError(Errc::EmptySpace, "product event needs at least one component");
    if (components.size() == 1) return components.front();

    std::size_t total = 1;
    for (const auto& e : components) {
        if (e.space_size() > kProductSpaceCap / total)
            throw ValidationError(Errc::ProductSpaceTooLarge, "product space too large");
        total *= e.space_size();
    }

    std::vector<std::size_t> indices{0};
    std::size_t block = total;
    for (const auto& e : components) {
        block /= e.space_size();
        std::vector<std::size_t> next;
        next.reserve(indices.size() * e.count());
        for (std::size_t base : indices)
            for (std::size_t k : e.indices()) next.push_back(base + k * block);
        indices = std::move(next);
    }
    return Event(std::move(indices), total);
}

double event_probability(const FiniteDistribution& dist, const Event& event) {
    if (event.space_size() != dist.size())
        throw ValidationError(Errc::SpaceMismatch,
                              "event space size " + std::to_string(event.space_size()) +
                                  " vs distribution size " + std::to_string(dist.size()));
    // extended-precision accumulation, so that e.g. a full event over
    // uniform(10) yields exactly 1 rather than ten accumulated roundings
    // of 0.1; the rounding happens once, at the final narrowing
    long double sum = 0.0L;
    for (std::size_t i : event.indices()) sum += dist.probs()[i];
    return std::clamp(static_cast<double>(sum), 0.0, 1.0);
}

FiniteDistribution coarsen(const FiniteDistribution& dist, const Event& target) {
    const double t = event_probability(dist, target);
    return FiniteDistribution({"T", "Tc"}, {t, 1.0 - t});
}

std::pair<FiniteDistribution, FiniteDistribution> merge_spaces(const FiniteDistribution& p1,
                                                               const FiniteDistribution& p2) {
    std::vector<std::string> merged = p1.labels();
    merged.insert(merged.end(), p2.labels().begin(), p2.labels().end());
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    std::unordered_map<std::string, std::size_t> position;
    position.reserve(merged.size());
    for (std::size_t i = 0; i < merged.size(); ++i) position.emplace(merged[i], i);

    auto extend = [&](const FiniteDistribution& p) {
        std::vector<double> probs(merged.size(), 0.0);
        for (std::size_t i = 0; i < p.size(); ++i)
            probs[position.at(p.labels()[i])] = p.probs()[i];
        return FiniteDistribution(merged, std::move(probs));
    };
    return {extend(p1), extend(p2)};
}

Event specification_event(std::span<const double> f_values, double f0) {
    if (f_values.empty())
        throw ValidationError(Errc::EmptySpace, "specification function over empty space");
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < f_values.size(); ++i)
        if (f_values[i] >= f0) indices.push_back(i);
    return Event(std::move(indices), f_values.size());
}

Event remap_event(const Event& event, const std::vector<std::string>& from_labels,
                  const FiniteDistribution& to) {
    if (event.space_size() != from_labels.size())
        throw ValidationError(Errc::SpaceMismatch, "event does not match the source label list");
    std::unordered_map<std::string, std::size_t> position;
    position.reserve(to.size());
    for (std::size_t i = 0; i < to.size(); ++i) position.emplace(to.labels()[i], i);

    std::vector<std::size_t> indices;
    indices.reserve(event.count());
    for (std::size_t i : event.indices()) {
        auto it = position.find(from_labels[i]);
        if (it == position.end())
            throw ValidationError(Errc::SpaceMismatch,
                                  "label \"" + from_labels[i] + "\" missing from target space");
        indices.push_back(it->second);
    }
    return Event(std::move(indices), to.size());
}

}  // namespace actinfo
