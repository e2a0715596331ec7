// Random walks on connected d-regular graphs. The walk's stationary
// distribution is uniform, so iterating a concentrated start toward it
// traces how target probability and system order evolve under purely
// neutral dynamics. A laziness parameter (stay-put probability) restores
// aperiodicity on bipartite graphs.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "actinfo/distribution.hpp"
#include "actinfo/ext_real.hpp"
#include "actinfo/log_base.hpp"
#include "actinfo/regimes.hpp"

namespace actinfo {

class RegularGraph {
  public:
    // Validates: indices in range, no self-loops or duplicate edges, all
    // degrees equal (and nonzero), connected. Bipartiteness is detected by
    // 2-coloring and stored. Vertex count is capped at 10^5.
    RegularGraph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t degree() const noexcept { return degree_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool bipartite() const noexcept { return bipartite_; }

    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }

  private:
    std::vector<std::vector<std::size_t>> adjacency_;
    std::size_t degree_ = 0;
    std::size_t edge_count_ = 0;
    bool bipartite_ = false;
};

struct WalkConfig {
    double laziness = 0.0;  // stay-put probability per step, in [0,1)
    std::size_t steps = 0;
};

struct TrajectoryPoint {
    std::size_t t = 0;
    double q_t = 0.0;               // P_t(T)
    ExtReal active_info;            // log [P_t(T) / P_1(T)], vs the fixed start
    ExtReal cai_coarsened;          // binary-partition conserved active info vs the start
    std::optional<Regime> regime;   // present when 0 < P_1(T) < 1/2
};

// 0.5 for bipartite graphs (periodicity would block convergence), else 0.
double default_laziness(const RegularGraph& graph) noexcept;

// One push-forward of the lazy walk:
// P'(y) = laziness * P(y) + (1 - laziness) * sum_{x ~ y} P(x)/d.
// The uniform distribution is a fixed point. Requires P over the graph's
// vertex set.
FiniteDistribution walk_step(const FiniteDistribution& dist, const RegularGraph& graph,
                             double laziness);

// Iterates walk_step, recording q_t and the measures of P_t against the
// fixed initial distribution. Returns config.steps + 1 points (t = 0 first).
std::vector<TrajectoryPoint> trajectory(const FiniteDistribution& start, const RegularGraph& graph,
                                        const Event& target, const WalkConfig& config,
                                        LogBase base = LogBase());

}  // namespace actinfo
