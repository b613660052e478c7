#include <gclose/generators.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <gclose/random.hpp>

namespace gclose {

Graph grid_graph(std::size_t rows, std::size_t cols) {
    std::vector<Edge> edges;
    auto id = [cols](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * cols + j); };
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (j + 1 < cols)
                edges.push_back({id(i, j), id(i, j + 1)});
            if (i + 1 < rows)
                edges.push_back({id(i, j), id(i + 1, j)});
        }
    return Graph::from_edges(rows * cols, edges, false);
}

Graph gnp_graph(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.unit() < p)
                edges.push_back({u, v});
    return Graph::from_edges(n, edges, false);
}

Graph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({static_cast<Vertex>(rng.below(v)), v});
    for (std::size_t i = 0; i < extra && n > 1; ++i)
        edges.push_back({static_cast<Vertex>(rng.below(n)), static_cast<Vertex>(rng.below(n))});
    return Graph::from_edges(n, edges, false);
}

Graph preferential_attachment_graph(std::size_t n, std::size_t attach, std::uint64_t seed) {
    if (attach == 0)
        throw std::invalid_argument("attach must be positive");
    Rng rng(seed);
    std::vector<Edge> edges;
    std::vector<Vertex> endpoints; // each vertex appears once per incident edge
    const std::size_t core = std::min(n, attach + 1);
    for (Vertex u = 0; u < core; ++u)
        for (Vertex v = u + 1; v < core; ++v) {
            edges.push_back({u, v});
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    std::vector<Vertex> chosen;
    for (auto v = static_cast<Vertex>(core); v < n; ++v) {
        chosen.clear();
        while (chosen.size() < attach) {
            const Vertex t = endpoints[rng.below(endpoints.size())];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
                chosen.push_back(t);
        }
        for (Vertex t : chosen) {
            edges.push_back({t, v});
            endpoints.push_back(t);
            endpoints.push_back(v);
        }
    }
    return Graph::from_edges(n, edges, false);
}

Graph with_random_weights(const Graph &g, std::uint32_t lo, std::uint32_t hi, std::uint64_t seed) {
    if (lo < 1 || hi < lo)
        throw std::invalid_argument("weights must satisfy 1 <= lo <= hi");
    Rng rng(seed);
    auto edges = g.edges();
    for (Edge &e : edges)
        e.w = static_cast<Weight>(lo + rng.below(hi - lo + 1));
    return Graph::from_edges(g.num_vertices(), edges, true);
}

} // namespace gclose
