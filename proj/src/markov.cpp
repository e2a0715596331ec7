#include "actinfo/markov.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>

#include "actinfo/measures.hpp"

namespace actinfo {

namespace {
constexpr std::size_t kVertexCap = 100'000;
}

RegularGraph::RegularGraph(std::size_t n,
                           const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (n == 0) throw ValidationError(Errc::EmptySpace, "graph needs at least one vertex");
    if (n > kVertexCap)
        throw ValidationError(Errc::GraphTooLarge,
                              "vertex count exceeds the cap of " + std::to_string(kVertexCap));

    adjacency_.assign(n, {});
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& [a, b] : edges) {
        if (a >= n || b >= n)
            throw ValidationError(Errc::BadEdge, "edge (" + std::to_string(a) + "," +
                                                     std::to_string(b) + ") outside 0.." +
                                                     std::to_string(n - 1));
        if (a == b)
            throw ValidationError(Errc::SelfLoop, "self-loop at vertex " + std::to_string(a));
        const auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw ValidationError(Errc::DuplicateEdge, "edge (" + std::to_string(key.first) + "," +
                                                           std::to_string(key.second) +
                                                           ") listed twice");
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    }
    edge_count_ = seen.size();

    degree_ = adjacency_[0].size();
    for (std::size_t v = 0; v < n; ++v) {
        if (adjacency_[v].size() != degree_)
            throw ValidationError(Errc::NotRegular,
                                  "vertex " + std::to_string(v) + " has degree " +
                                      std::to_string(adjacency_[v].size()) + ", expected " +
                                      std::to_string(degree_));
        std::sort(adjacency_[v].begin(), adjacency_[v].end());
    }
    if (degree_ == 0)
        throw ValidationError(Errc::NotRegular, "0-regular graphs carry no random walk");

    // connectivity and 2-colorability in one BFS
    std::vector<int> color(n, -1);
    std::queue<std::size_t> frontier;
    color[0] = 0;
    frontier.push(0);
    std::size_t reached = 1;
    bipartite_ = true;
    while (!frontier.empty()) {
        const std::size_t v = frontier.front();
        frontier.pop();
        for (std::size_t w : adjacency_[v]) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                frontier.push(w);
                ++reached;
            } else if (color[w] == color[v]) {
                bipartite_ = false;
            }
        }
    }
    if (reached != n)
        throw ValidationError(Errc::NotConnected, "graph has more than one component");
}

double default_laziness(const RegularGraph& graph) noexcept {
    return graph.bipartite() ? 0.5 : 0.0;
}

FiniteDistribution walk_step(const FiniteDistribution& dist, const RegularGraph& graph,
                             double laziness) {
    if (!(laziness >= 0.0 && laziness < 1.0))
        throw ValidationError(Errc::LazinessOutOfRange,
                              "laziness " + std::to_string(laziness) + " outside [0,1)");
    const std::size_t n = graph.vertex_count();
    if (dist.size() != n)
        throw ValidationError(Errc::SpaceMismatch,
                              "distribution size " + std::to_string(dist.size()) +
                                  " vs graph with " + std::to_string(n) + " vertices");

    const double move = (1.0 - laziness) / static_cast<double>(graph.degree());
    std::vector<double> next(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        double in = 0.0;
        for (std::size_t w : graph.neighbors(v)) in += dist.probs()[w];
        next[v] = laziness * dist.probs()[v] + move * in;
    }
    return FiniteDistribution(dist.labels(), std::move(next));
}

std::vector<TrajectoryPoint> trajectory(const FiniteDistribution& start,
                                        const RegularGraph& graph, const Event& target,
                                        const WalkConfig& config, LogBase base) {
    const double p0 = event_probability(start, target);
    const bool classify = p0 > 0.0 && p0 < 0.5;

    std::vector<TrajectoryPoint> points;
    points.reserve(config.steps + 1);
    FiniteDistribution current = start;
    for (std::size_t t = 0;; ++t) {
        TrajectoryPoint point;
        point.t = t;
        point.q_t = event_probability(current, target);
        point.active_info = active_information(start, current, target, base);
        point.cai_coarsened = coarsened_cai(start, current, target, base);
        if (classify) point.regime = classify_regime(p0, point.q_t);
        points.push_back(std::move(point));
        if (t == config.steps) break;
        current = walk_step(current, graph, config.laziness);
    }
    return points;
}

}  // namespace actinfo
