#ifndef GCLOSE_GROW_SHRINK_HPP_
#define GCLOSE_GROW_SHRINK_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <gclose/graph.hpp>
#include <gclose/reach.hpp>
#include <gclose/search_result.hpp>
#include <gclose/sssp.hpp>

namespace gclose {

enum class GrowCandidates {
    global, // any non-member
    local,  // non-members adjacent to the group
};

struct GrowStep {
    Vertex added = kNoVertex;
    double delta_minus = 0; // f(S) - f(S + v)
    std::size_t work = 0;
};

struct ShrinkStep {
    Vertex removed = kNoVertex;
    double delta_plus = 0; // f(S - u) - f(S)
    /// Vertices whose second distance was invalidated and repaired.
    std::vector<Vertex> repaired;
    std::size_t work = 0;
};

/**
 * Incremental state of the Grow-Shrink search.
 *
 * For every vertex x (members included) it keeps the nearest group distance
 * d(x) with representative r(x), and d2(x) = dist(S - r(x), x) with
 * representative r2(x) != r(x). A member u has d(u) = 0, r(u) = u and d2(u)
 * the distance it would have after its own removal, which makes
 * f(S - u) - f(S) = sum over r(x) = u of d2(x) - d(x) exact. With a single
 * member d2 is infinite and r2 is kNoVertex. The graph must outlive the state.
 */
class GsState {
public:
    /// One traversal per member; representatives tie-break to the lowest id.
    GsState(const Graph &g, std::span<const Vertex> group);
    GsState(Graph &&, std::span<const Vertex>) = delete; // keeps a pointer to g

    const Graph &graph() const noexcept { return *g_; }
    std::size_t size() const noexcept { return group_.size(); }
    /// Members in internal order (not sorted).
    std::span<const Vertex> group() const noexcept { return group_; }
    bool in_group(Vertex x) const noexcept { return index_[x] != kNoVertex; }

    std::span<const Distance> d() const noexcept { return d_; }
    std::span<const Vertex> r() const noexcept { return r_; }
    std::span<const Distance> d2() const noexcept { return d2_; }
    std::span<const Vertex> r2() const noexcept { return r2_; }
    double farness() const noexcept { return farness_; }

    /// argmax of estimate(v) * d(v) over the candidate set, lowest id on ties.
    std::optional<Vertex> select_grow(const ReachEstimate &reach, GrowCandidates candidates) const;

    /// Adds v with a traversal that stops where v is no closer than d2.
    GrowStep grow(Vertex v);

    /// Exact f(S - u) - f(S) for every member, aligned with group().
    std::vector<double> delta_plus_all() const;

    /// Removes the member with the smallest delta_plus (lowest id on ties).
    ShrinkStep shrink();

    /// Removes member u and repairs d2/r2 from boundary pairs followed by a
    /// Dijkstra-like relaxation. Requires |S| >= 2.
    ShrinkStep remove(Vertex u);

private:
    const Graph *g_;
    std::vector<Vertex> group_;
    std::vector<Vertex> index_; // position in group_ or kNoVertex
    DistanceField d_, d2_;
    std::vector<Vertex> r_, r2_;
    double farness_ = 0;

    PrunedSearch search_;
    std::vector<std::uint8_t> invalid_;
};

enum class GrowShrinkVariant {
    gs,       // one global grow per shrink
    local,    // one local grow per shrink
    extended, // h local grows, then h shrinks
};

struct GrowShrinkOptions {
    GrowShrinkVariant variant = GrowShrinkVariant::gs;
    /// Extended variant only: constant h, or h = max(1, round(diam / k^p)).
    std::optional<std::size_t> h;
    double p = 0.75;
    std::size_t max_exchanges = 100;
    ReachParams reach;
    std::uint64_t seed = 1;
    std::optional<std::vector<Vertex>> initial;
};

struct GrowShrinkObserver {
    std::function<void(const GsState &, const GrowStep &)> after_grow;
    std::function<void(const GsState &, const ShrinkStep &)> after_shrink;
};

/// Number of grow steps per round for the given options.
std::size_t grow_steps(const Graph &g, std::size_t k, const GrowShrinkOptions &options);

/**
 * Grow-Shrink search. A round grows the group by h vertices (re-estimating
 * reachability before each addition) and shrinks it back to k. A round that
 * does not strictly decrease farness is rolled back and ends the search;
 * at most max_exchanges rounds are accepted. The reported farness is
 * re-evaluated from scratch.
 */
SearchResult grow_shrink(const Graph &g, std::size_t k, const GrowShrinkOptions &options = {},
                         const GrowShrinkObserver &observer = {});

} // namespace gclose

#endif // GCLOSE_GROW_SHRINK_HPP_
