#include <gclose/objective.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <gclose/sssp.hpp>

namespace gclose {

namespace {

void check_group(const Graph &g, std::span<const Vertex> group) {
    if (group.empty())
        throw std::invalid_argument("empty group");
    std::vector<Vertex> sorted(group.begin(), group.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.back() >= g.num_vertices())
        throw std::invalid_argument("group vertex " + std::to_string(sorted.back())
                                    + " out of range");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("repeated group vertex");
}

double farness_unchecked(const Graph &g, std::span<const Vertex> group) {
    const auto dist = multi_source_sssp(g, group);
    // Members are at distance zero, so summing over all of V is the same.
    return std::accumulate(dist.begin(), dist.end(), 0.0);
}

} // namespace

double farness(const Graph &g, std::span<const Vertex> group) {
    check_group(g, group);
    return farness_unchecked(g, group);
}

double closeness(const Graph &g, std::span<const Vertex> group) {
    return score(g, group).closeness;
}

GroupScore score(const Graph &g, std::span<const Vertex> group) {
    GroupScore s;
    s.farness = farness(g, group);
    s.closeness = s.farness > 0 ? static_cast<double>(g.num_vertices()) / s.farness
                                : std::numeric_limits<double>::infinity();
    return s;
}

double delta_minus_exact(const Graph &g, std::span<const Vertex> group, Vertex v) {
    check_group(g, group);
    if (std::find(group.begin(), group.end(), v) != group.end())
        throw std::invalid_argument("vertex already in the group");
    std::vector<Vertex> grown(group.begin(), group.end());
    grown.push_back(v);
    check_group(g, grown);
    return farness_unchecked(g, group) - farness_unchecked(g, grown);
}

double delta_plus_exact(const Graph &g, std::span<const Vertex> group, Vertex u) {
    check_group(g, group);
    if (group.size() < 2)
        throw std::invalid_argument("cannot remove from a group of size 1");
    std::vector<Vertex> shrunk;
    for (Vertex x : group)
        if (x != u)
            shrunk.push_back(x);
    if (shrunk.size() == group.size())
        throw std::invalid_argument("vertex not in the group");
    return farness_unchecked(g, shrunk) - farness_unchecked(g, group);
}

double binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    double c = 1;
    for (std::size_t i = 1; i <= k; ++i)
        c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    return c;
}

OptimumGroup brute_force_optimum(const Graph &g, std::size_t k) {
    const std::size_t n = g.num_vertices();
    if (k < 1 || k > n)
        throw std::invalid_argument("group size out of range");
    if (binomial(n, k) > kEnumerationCap)
        throw OracleLimitError("C(" + std::to_string(n) + ", " + std::to_string(k)
                               + ") exceeds the enumeration cap");

    std::vector<Vertex> current(k);
    std::iota(current.begin(), current.end(), Vertex{0});
    OptimumGroup best{current, std::numeric_limits<double>::infinity()};
    // Lexicographic enumeration; strict improvement keeps the first optimum.
    while (true) {
        const double f = farness_unchecked(g, current);
        if (f < best.farness)
            best = {current, f};
        std::size_t i = k;
        while (i > 0 && current[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            break;
        ++current[i - 1];
        for (std::size_t j = i; j < k; ++j)
            current[j] = current[j - 1] + 1;
    }
    return best;
}

} // namespace gclose
