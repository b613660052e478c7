#ifndef GCLOSE_SSSP_HPP_
#define GCLOSE_SSSP_HPP_

#include <cstddef>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include <gclose/graph.hpp>
#include <gclose/types.hpp>

namespace gclose {

/// dist(S, x) for every vertex; hop counts on unweighted graphs.
using DistanceField = std::vector<Distance>;

/// Exact distances from the source set (BFS if unweighted, Dijkstra otherwise).
/// Throws std::invalid_argument on an empty or out-of-range source set.
DistanceField multi_source_sssp(const Graph &g, std::span<const Vertex> sources);

inline DistanceField single_source_sssp(const Graph &g, Vertex s) {
    return multi_source_sssp(g, std::span<const Vertex>(&s, 1));
}

/**
 * Shortest-path DAG of a group: every edge x -> y with dist(x) + w(x, y) = dist(y).
 *
 * Also carries a reverse topological order (non-increasing distance, equal
 * distances by decreasing id); positive weights make every DAG edge strictly
 * increase the distance, so no explicit topological sort is needed.
 */
class GroupDag {
public:
    const DistanceField &dist() const noexcept { return dist_; }
    std::size_t num_vertices() const noexcept { return dist_.size(); }
    std::size_t num_edges() const noexcept { return succ_.size(); }

    std::span<const Vertex> successors(Vertex x) const noexcept {
        return {succ_.data() + offsets_[x], succ_.data() + offsets_[x + 1]};
    }

    std::span<const Vertex> reverse_topological_order() const noexcept { return order_; }

    friend GroupDag build_group_dag(const Graph &g, DistanceField dist);

private:
    DistanceField dist_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> succ_;
    std::vector<Vertex> order_;
};

GroupDag build_group_dag(const Graph &g, std::span<const Vertex> sources);

/// Builds the DAG from an already exact distance field (sources are the zeros).
GroupDag build_group_dag(const Graph &g, DistanceField dist);

/**
 * Single-source traversal that only settles vertices accepted by a predicate.
 *
 * run() settles vertices in non-decreasing distance from the root. A vertex
 * reached with tentative distance t is entered only if keep(x, t) holds;
 * keep must be monotone (if it rejects t it rejects every larger value).
 * visit(x, dist) is called once per settled vertex. Scratch memory is reused
 * across runs, so repeated pruned searches cost only what they touch.
 */
class PrunedSearch {
public:
    explicit PrunedSearch(std::size_t n = 0) : dist_(n, kInfDistance) {}

    template <class Keep, class Visit>
    void run(const Graph &g, Vertex root, Keep &&keep, Visit &&visit);

    /// Settled vertices plus scanned edges during the last run().
    std::size_t work() const noexcept { return work_; }

private:
    void reset() {
        for (Vertex x : touched_)
            dist_[x] = kInfDistance;
        touched_.clear();
    }

    DistanceField dist_;
    std::vector<Vertex> touched_;
    std::vector<Vertex> queue_;
    std::vector<bool> settled_;
    std::size_t work_ = 0;
};

template <class Keep, class Visit>
void PrunedSearch::run(const Graph &g, Vertex root, Keep &&keep, Visit &&visit) {
    if (dist_.size() != g.num_vertices())
        dist_.assign(g.num_vertices(), kInfDistance);
    reset();
    work_ = 0;
    if (!keep(root, Distance{0}))
        return;

    dist_[root] = 0;
    touched_.push_back(root);

    if (!g.weighted()) {
        queue_.clear();
        queue_.push_back(root);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const Vertex x = queue_[head];
            const Distance dx = dist_[x];
            ++work_;
            visit(x, dx);
            for (Vertex y : g.neighbors(x)) {
                ++work_;
                if (dist_[y] != kInfDistance)
                    continue;
                // Marked even when rejected: BFS discovery distance is final.
                dist_[y] = dx + 1;
                touched_.push_back(y);
                if (keep(y, dx + 1))
                    queue_.push_back(y);
            }
        }
        return;
    }

    if (settled_.size() != g.num_vertices())
        settled_.assign(g.num_vertices(), false);
    using Entry = std::pair<Distance, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.emplace(Distance{0}, root);
    while (!heap.empty()) {
        const auto [dx, x] = heap.top();
        heap.pop();
        if (settled_[x] || dx > dist_[x])
            continue;
        settled_[x] = true;
        ++work_;
        visit(x, dx);
        const auto nbrs = g.neighbors(x);
        const auto ws = g.weights(x);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            ++work_;
            const Vertex y = nbrs[i];
            const Distance nd = dx + ws[i];
            if (nd < dist_[y] && keep(y, nd)) {
                if (dist_[y] == kInfDistance)
                    touched_.push_back(y);
                dist_[y] = nd;
                heap.emplace(nd, y);
            }
        }
    }
    for (Vertex x : touched_)
        settled_[x] = false;
}

} // namespace gclose

#endif // GCLOSE_SSSP_HPP_
