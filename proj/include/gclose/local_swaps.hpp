#ifndef GCLOSE_LOCAL_SWAPS_HPP_
#define GCLOSE_LOCAL_SWAPS_HPP_

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

enum class SwapVariant {
    base,       // u must be a neighbor of v
    semi_local, // u may also be any member adjacent to another member
    restricted, // fix v by largest reach first, then pick u
};

struct SwapCandidate {
    Vertex u = kNoVertex; // leaves the group
    Vertex v = kNoVertex; // enters the group
    double bound = 0;     // |D_v| estimate - |Lambda_u|
};

/// Counters gathered by the pruned BFS of one swap. Sets are taken before the
/// swap; H- and H+ range over all of V (v is in H-, u is in H+), Lambda_u and
/// L0 over the non-members.
struct SwapAccounting {
    std::size_t h_minus = 0;          // |H-|
    std::size_t lambda_u = 0;         // |Lambda_u|
    std::size_t lambda_u_h_minus = 0; // |Lambda_u cap H-|
    std::size_t l_zero = 0;           // |L0|
    std::size_t h_plus = 0;           // |Lambda_u| - |Lambda_u cap H-| - |L0| + 1
    std::int64_t delta = 0;           // f(S) - f(S'), = |H-| - |H+|
    std::size_t work = 0;             // vertex and edge visits
};

/**
 * Incremental state of the Local-Swaps search on an unweighted graph.
 *
 * Each member owns a slot 0..k-1. For every non-member x the state keeps
 * dist(S, x), the k-bit set lambda_x of slots whose member realizes that
 * distance, and for every slot the number of non-members it covers
 * exclusively. A member's own lambda is its slot bit. The graph must outlive
 * the state.
 */
class LsState {
public:
    /// Throws WeightedGraphError on weighted input and std::invalid_argument on
    /// an empty group, repeated ids or a disconnected graph.
    LsState(const Graph &g, std::span<const Vertex> group);
    LsState(Graph &&, std::span<const Vertex>) = delete; // keeps a pointer to g

    const Graph &graph() const noexcept { return *g_; }
    std::size_t size() const noexcept { return group_.size(); }
    /// Members indexed by slot.
    std::span<const Vertex> group() const noexcept { return group_; }
    bool in_group(Vertex x) const noexcept { return slot_[x] != kNoSlot; }
    std::size_t slot_of(Vertex x) const noexcept { return slot_[x]; }

    const DistanceField &distances() const noexcept { return dist_; }
    double farness() const noexcept { return farness_; }

    /// Slots in lambda_x, ascending.
    std::vector<std::size_t> lambda(Vertex x) const;
    /// |Lambda_u| for the member in @p slot.
    std::size_t exclusive_count(std::size_t slot) const noexcept { return exclusive_[slot]; }

    std::optional<SwapCandidate> select_swap(const ReachEstimate &reach, SwapVariant variant) const;

    /// Swaps member u for v. v must be at distance 1 from the group and u must
    /// be adjacent to v or to another member, so all distances move by at most
    /// one hop. v inherits u's slot. Throws std::invalid_argument otherwise.
    SwapAccounting apply_swap(Vertex u, Vertex v);

private:
    static constexpr std::size_t kNoSlot = static_cast<std::size_t>(-1);

    std::uint64_t *bits(Vertex x) noexcept { return lambda_.data() + x * words_; }
    const std::uint64_t *bits(Vertex x) const noexcept { return lambda_.data() + x * words_; }
    bool lambda_has(Vertex x, std::size_t slot) const noexcept {
        return (bits(x)[slot / 64] >> (slot % 64)) & 1U;
    }
    bool lambda_is(Vertex x, std::size_t slot) const noexcept;
    void recount_exclusive();

    const Graph *g_;
    std::vector<Vertex> group_;
    std::vector<std::size_t> slot_;
    DistanceField dist_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> lambda_;
    std::vector<std::size_t> exclusive_;
    double farness_ = 0;

    PrunedSearch search_;
    std::vector<std::uint8_t> mark_;
};

struct LocalSwapOptions {
    SwapVariant variant = SwapVariant::base;
    std::size_t max_exchanges = 100;
    ReachParams reach;
    std::uint64_t seed = 1;
    /// Overrides the seeded uniform draw of the initial group.
    std::optional<std::vector<Vertex>> initial;
};

struct LocalSwapObserver {
    std::function<void(const LsState &, const SwapCandidate &)> before_swap;
    std::function<void(const LsState &, const SwapAccounting &)> after_swap;
};

/**
 * Local-Swaps search. Each iteration estimates reachability sizes on the
 * current group DAG, applies the selected swap and measures its exact effect;
 * a swap that does not strictly decrease farness is undone and the search
 * stops. Also stops after max_exchanges accepted swaps.
 */
SearchResult local_swaps(const Graph &g, std::size_t k, const LocalSwapOptions &options = {},
                         const LocalSwapObserver &observer = {});

} // namespace gclose

#endif // GCLOSE_LOCAL_SWAPS_HPP_
