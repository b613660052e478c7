#include <gclose/greedy.hpp>

#include <stdexcept>

namespace gclose {

GreedyResult greedy_group(const Graph &g, std::size_t k, const GreedyObserver &observer) {
    const std::size_t n = g.num_vertices();
    if (k < 1 || k >= n)
        throw std::invalid_argument("group size must satisfy 1 <= k < n");

    PrunedSearch search(n);
    GreedyResult result;

    Vertex first = kNoVertex;
    double best_farness = kInfDistance;
    for (Vertex v = 0; v < n; ++v) {
        double f = 0;
        std::size_t reached = 0;
        search.run(
            g, v, [](Vertex, Distance) { return true; },
            [&](Vertex, Distance d) {
                f += d;
                ++reached;
            });
        if (reached != n)
            throw std::invalid_argument("greedy requires a connected graph");
        if (f < best_farness) {
            best_farness = f;
            first = v;
        }
    }

    DistanceField dist = single_source_sssp(g, first);
    std::vector<bool> in_group(n, false);
    in_group[first] = true;
    result.group.push_back(first);
    result.trace.push_back(best_farness);
    double current = best_farness;
    if (observer)
        observer(result.group, dist);

    auto closer = [&](Vertex x, Distance t) { return t < dist[x]; };

    while (result.group.size() < k) {
        Vertex best = kNoVertex;
        double best_gain = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (in_group[v])
                continue;
            double gain = 0;
            search.run(g, v, closer, [&](Vertex x, Distance t) { gain += dist[x] - t; });
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }

        search.run(g, best, closer, [&](Vertex x, Distance t) { dist[x] = t; });
        in_group[best] = true;
        result.group.push_back(best);
        current -= best_gain;
        result.trace.push_back(current);
        if (observer)
            observer(result.group, dist);
    }
    return result;
}

} // namespace gclose
