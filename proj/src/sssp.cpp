#include <gclose/sssp.hpp>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gclose {

DistanceField multi_source_sssp(const Graph &g, std::span<const Vertex> sources) {
    if (sources.empty())
        throw std::invalid_argument("empty source set");
    const std::size_t n = g.num_vertices();
    DistanceField dist(n, kInfDistance);
    for (Vertex s : sources) {
        if (s >= n)
            throw std::invalid_argument("source vertex out of range");
        dist[s] = 0;
    }

    if (!g.weighted()) {
        std::vector<Vertex> queue;
        queue.reserve(n);
        queue.assign(sources.begin(), sources.end());
        std::sort(queue.begin(), queue.end());
        queue.erase(std::unique(queue.begin(), queue.end()), queue.end());
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            for (Vertex y : g.neighbors(x))
                if (dist[y] == kInfDistance) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
        }
        return dist;
    }

    // Binary heap with lazy deletion.
    using Entry = std::pair<Distance, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (Vertex s : sources)
        heap.emplace(Distance{0}, s);
    while (!heap.empty()) {
        const auto [dx, x] = heap.top();
        heap.pop();
        if (dx > dist[x])
            continue;
        const auto nbrs = g.neighbors(x);
        const auto ws = g.weights(x);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const Distance nd = dx + ws[i];
            if (nd < dist[nbrs[i]]) {
                dist[nbrs[i]] = nd;
                heap.emplace(nd, nbrs[i]);
            }
        }
    }
    return dist;
}

GroupDag build_group_dag(const Graph &g, std::span<const Vertex> sources) {
    return build_group_dag(g, multi_source_sssp(g, sources));
}

GroupDag build_group_dag(const Graph &g, DistanceField dist) {
    const std::size_t n = g.num_vertices();
    if (dist.size() != n)
        throw std::invalid_argument("distance field size does not match the graph");

    for (Distance d : dist)
        if (d == kInfDistance)
            throw std::invalid_argument("group DAG requires a connected graph");

    GroupDag dag;
    dag.offsets_.assign(n + 1, 0);
    for (Vertex x = 0; x < n; ++x) {
        const auto nbrs = g.neighbors(x);
        const auto ws = g.weights(x);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            if (dist[x] + ws[i] == dist[nbrs[i]])
                dag.succ_.push_back(nbrs[i]);
        dag.offsets_[x + 1] = dag.succ_.size();
    }

    dag.order_.resize(n);
    if (!g.weighted()) {
        // Counting sort on integral hop distances.
        std::size_t max_hops = 0;
        for (Distance d : dist)
            max_hops = std::max(max_hops, static_cast<std::size_t>(d));
        std::vector<std::size_t> start(max_hops + 2, 0);
        for (Distance d : dist)
            ++start[max_hops - static_cast<std::size_t>(d) + 1];
        for (std::size_t b = 1; b < start.size(); ++b)
            start[b] += start[b - 1];
        for (Vertex x = static_cast<Vertex>(n); x-- > 0;)
            dag.order_[start[max_hops - static_cast<std::size_t>(dist[x])]++] = x;
    } else {
        for (Vertex x = 0; x < n; ++x)
            dag.order_[x] = x;
        std::sort(dag.order_.begin(), dag.order_.end(), [&](Vertex a, Vertex b) {
            return dist[a] != dist[b] ? dist[a] > dist[b] : a > b;
        });
    }

    dag.dist_ = std::move(dist);
    return dag;
}

} // namespace gclose
