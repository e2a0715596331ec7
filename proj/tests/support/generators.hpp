// Random and exhaustive input generators for property-style tests.

#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "actinfo/distribution.hpp"

namespace gen {

using Rng = std::mt19937_64;

// Dirichlet-like full-support distribution via normalized exponential weights.
inline std::vector<double> random_probs(Rng& rng, std::size_t n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> w(n);
    double sum = 0.0;
    for (auto& x : w) {
        x = -std::log(1.0 - unit(rng));
        sum += x;
    }
    for (auto& x : w) x /= sum;
    return w;
}

// Same, but each entry is zeroed with probability zero_rate (at least one
// entry stays positive); the rest are renormalized.
inline std::vector<double> random_probs_with_zeros(Rng& rng, std::size_t n, double zero_rate) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> w = random_probs(rng, n);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (unit(rng) < zero_rate) w[i] = 0.0;
        sum += w[i];
    }
    sum += w[n - 1];
    for (auto& x : w) x /= sum;
    return w;
}

inline actinfo::FiniteDistribution distribution_of(const std::vector<double>& probs) {
    std::vector<std::string> labels(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) labels[i] = std::to_string(i);
    return actinfo::FiniteDistribution(std::move(labels), probs);
}

inline std::vector<std::size_t> random_event_indices(Rng& rng, std::size_t n) {
    std::bernoulli_distribution coin(0.5);
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < n; ++i)
        if (coin(rng)) indices.push_back(i);
    return indices;
}

namespace detail {
inline void compositions(std::size_t size, unsigned remaining, std::size_t depth,
                         std::vector<unsigned>& parts, double unit,
                         std::vector<std::vector<double>>& out) {
    if (depth + 1 == size) {
        parts[depth] = remaining;
        std::vector<double> probs(size);
        for (std::size_t i = 0; i < size; ++i) probs[i] = parts[i] * unit;
        out.push_back(std::move(probs));
        return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
        parts[depth] = k;
        compositions(size, remaining - k, depth + 1, parts, unit, out);
    }
}
}  // namespace detail

// All probability vectors of the given size whose entries are multiples of
// 1/grid_steps (compositions of grid_steps into size parts).
inline std::vector<std::vector<double>> grid_distributions(std::size_t size,
                                                           unsigned grid_steps) {
    std::vector<std::vector<double>> result;
    std::vector<unsigned> parts(size, 0);
    detail::compositions(size, grid_steps, 0, parts, 1.0 / static_cast<double>(grid_steps),
                         result);
    return result;
}

}  // namespace gen
