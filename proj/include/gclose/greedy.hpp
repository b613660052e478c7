#ifndef GCLOSE_GREEDY_HPP_
#define GCLOSE_GREEDY_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <gclose/graph.hpp>
#include <gclose/sssp.hpp>

namespace gclose {

struct GreedyResult {
    std::vector<Vertex> group; // in insertion order
    std::vector<double> trace; // farness after each insertion
};

/// Called after every insertion with the group so far and the maintained dist(S, .).
using GreedyObserver = std::function<void(std::span<const Vertex>, const DistanceField &)>;

/**
 * Marginal-gain greedy baseline.
 *
 * The first vertex minimizes f({v}) (one full traversal per vertex). Every
 * later step evaluates f(S) - f(S + v) for all outside v with a traversal from
 * v that stops at vertices x with dist(v, x) >= dist(S, x), then adds the best.
 * Ties go to the lowest id. Requires 1 <= k < n and a connected graph.
 */
GreedyResult greedy_group(const Graph &g, std::size_t k, const GreedyObserver &observer = {});

} // namespace gclose

#endif // GCLOSE_GREEDY_HPP_
