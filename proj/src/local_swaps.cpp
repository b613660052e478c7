#include <gclose/local_swaps.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <gclose/random.hpp>

namespace gclose {

LsState::LsState(const Graph &g, std::span<const Vertex> group)
    : g_(&g), group_(group.begin(), group.end()) {
    if (g.weighted())
        throw WeightedGraphError("Local-Swaps requires an unweighted graph");
    const std::size_t n = g.num_vertices();
    const std::size_t k = group_.size();
    if (k == 0)
        throw std::invalid_argument("empty group");

    slot_.assign(n, kNoSlot);
    for (std::size_t i = 0; i < k; ++i) {
        if (group_[i] >= n)
            throw std::invalid_argument("group vertex out of range");
        if (slot_[group_[i]] != kNoSlot)
            throw std::invalid_argument("repeated group vertex");
        slot_[group_[i]] = i;
    }

    words_ = (k + 63) / 64;
    lambda_.assign(n * words_, 0);
    dist_.assign(n, kInfDistance);
    exclusive_.assign(k, 0);
    mark_.assign(n, 0);
    search_ = PrunedSearch(n);

    // One multi-source BFS carrying slot sets along every shortest path.
    std::vector<Vertex> queue(group_);
    for (std::size_t i = 0; i < k; ++i) {
        dist_[group_[i]] = 0;
        bits(group_[i])[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (Vertex y : g.neighbors(x)) {
            if (dist_[y] == kInfDistance) {
                dist_[y] = dist_[x] + 1;
                queue.push_back(y);
            } else if (dist_[y] != dist_[x] + 1) {
                continue;
            }
            for (std::size_t w = 0; w < words_; ++w)
                bits(y)[w] |= bits(x)[w];
        }
    }
    if (queue.size() != n)
        throw std::invalid_argument("Local-Swaps requires a connected graph");

    farness_ = 0;
    for (Distance d : dist_)
        farness_ += d;
    recount_exclusive();
}

std::vector<std::size_t> LsState::lambda(Vertex x) const {
    std::vector<std::size_t> out;
    for (std::size_t s = 0; s < group_.size(); ++s)
        if (lambda_has(x, s))
            out.push_back(s);
    return out;
}

bool LsState::lambda_is(Vertex x, std::size_t slot) const noexcept {
    const std::uint64_t *b = bits(x);
    for (std::size_t w = 0; w < words_; ++w) {
        const std::uint64_t expect = (w == slot / 64) ? std::uint64_t{1} << (slot % 64) : 0;
        if (b[w] != expect)
            return false;
    }
    return true;
}

void LsState::recount_exclusive() {
    std::fill(exclusive_.begin(), exclusive_.end(), 0);
    const std::size_t n = g_->num_vertices();
    for (Vertex x = 0; x < n; ++x) {
        if (in_group(x))
            continue;
        const std::uint64_t *b = bits(x);
        int pop = 0;
        std::size_t only = 0;
        for (std::size_t w = 0; w < words_ && pop < 2; ++w)
            if (b[w]) {
                pop += std::popcount(b[w]);
                only = w * 64 + static_cast<std::size_t>(std::countr_zero(b[w]));
            }
        if (pop == 1)
            ++exclusive_[only];
    }
}

std::optional<SwapCandidate> LsState::select_swap(const ReachEstimate &reach,
                                                  SwapVariant variant) const {
    const std::size_t n = g_->num_vertices();
    if (reach.size() != n)
        throw std::invalid_argument("reach estimate does not match the graph");

    // Lower |Lambda_u| first, then lower id.
    auto better = [&](Vertex a, Vertex b) {
        if (b == kNoVertex)
            return true;
        const auto ea = exclusive_[slot_[a]];
        const auto eb = exclusive_[slot_[b]];
        return ea != eb ? ea < eb : a < b;
    };

    std::vector<Vertex> best_u(n, kNoVertex);
    std::vector<Vertex> frontier;
    Vertex semi_u = kNoVertex;
    for (Vertex u : group_) {
        bool touches_member = false;
        for (Vertex v : g_->neighbors(u)) {
            if (in_group(v)) {
                touches_member = true;
                continue;
            }
            if (best_u[v] == kNoVertex)
                frontier.push_back(v);
            if (better(u, best_u[v]))
                best_u[v] = u;
        }
        if (touches_member && better(u, semi_u))
            semi_u = u;
    }
    if (frontier.empty())
        return std::nullopt;

    auto bound = [&](Vertex u, Vertex v) {
        return reach[v] - static_cast<double>(exclusive_[slot_[u]]);
    };

    if (variant == SwapVariant::restricted) {
        Vertex v_best = kNoVertex;
        for (Vertex v : frontier)
            if (v_best == kNoVertex || reach[v] > reach[v_best]
                || (reach[v] == reach[v_best] && v < v_best))
                v_best = v;
        return SwapCandidate{best_u[v_best], v_best, bound(best_u[v_best], v_best)};
    }

    std::optional<SwapCandidate> best;
    for (Vertex v : frontier) {
        Vertex u = best_u[v];
        if (variant == SwapVariant::semi_local && semi_u != kNoVertex && better(semi_u, u))
            u = semi_u;
        const double b = bound(u, v);
        if (!best || b > best->bound || (b == best->bound && v < best->v))
            best = SwapCandidate{u, v, b};
    }
    return best;
}

SwapAccounting LsState::apply_swap(Vertex u, Vertex v) {
    const std::size_t n = g_->num_vertices();
    if (u >= n || v >= n || !in_group(u) || in_group(v))
        throw std::invalid_argument("swap needs a member u and a non-member v");
    if (dist_[v] != 1)
        throw std::invalid_argument("swap target must be adjacent to the group");
    const auto nbrs_u = g_->neighbors(u);
    if (std::none_of(nbrs_u.begin(), nbrs_u.end(),
                     [&](Vertex y) { return y == v || in_group(y); }))
        throw std::invalid_argument("swapped-out member must be adjacent to v or another member");

    const std::size_t su = slot_[u];
    SwapAccounting acc;
    acc.lambda_u = exclusive_[su];

    struct Closer {
        Vertex x;
        Distance t;
    };
    std::vector<Closer> closer;
    std::vector<Vertex> tied;

    // Pruned only where v is strictly farther, so ties (L0 and new co-realizers)
    // are reached as well.
    search_.run(
        *g_, v, [&](Vertex x, Distance t) { return t <= dist_[x]; },
        [&](Vertex x, Distance t) {
            const bool exclusive_to_u = lambda_is(x, su);
            if (t < dist_[x]) {
                ++acc.h_minus;
                acc.lambda_u_h_minus += exclusive_to_u;
                closer.push_back({x, t});
                mark_[x] = 1;
            } else {
                acc.l_zero += exclusive_to_u;
                tied.push_back(x);
                mark_[x] = 1;
            }
        });
    acc.work = search_.work();

    acc.h_plus = acc.lambda_u - acc.lambda_u_h_minus - acc.l_zero + 1;
    acc.delta = static_cast<std::int64_t>(acc.h_minus) - static_cast<std::int64_t>(acc.h_plus);

    // Drop u's slot everywhere; unreached vertices left empty are exactly H+.
    const std::uint64_t clear_mask = ~(std::uint64_t{1} << (su % 64));
    std::vector<Vertex> raised;
    for (Vertex x = 0; x < n; ++x) {
        if (in_group(x))
            continue;
        std::uint64_t *b = bits(x);
        b[su / 64] &= clear_mask;
        if (!mark_[x] && std::all_of(b, b + words_, [](std::uint64_t w) { return w == 0; }))
            raised.push_back(x);
    }
    acc.work += n * words_;

    group_[su] = v;
    slot_[v] = su;
    slot_[u] = kNoSlot;

    const std::uint64_t v_bit = std::uint64_t{1} << (su % 64);
    for (const Closer &c : closer) {
        dist_[c.x] = c.t;
        std::fill(bits(c.x), bits(c.x) + words_, 0);
        bits(c.x)[su / 64] = v_bit;
        mark_[c.x] = 0;
    }
    for (Vertex x : tied) {
        bits(x)[su / 64] |= v_bit;
        mark_[x] = 0;
    }

    dist_[u] = 0;
    std::fill(bits(u), bits(u) + words_, 0);
    raised.push_back(u);
    if (raised.size() != acc.h_plus)
        throw std::logic_error("inconsistent Local-Swaps state: |H+| mismatch");

    for (Vertex x : raised)
        dist_[x] += 1;
    std::sort(raised.begin(), raised.end(), [&](Vertex a, Vertex b) {
        return dist_[a] != dist_[b] ? dist_[a] < dist_[b] : a < b;
    });
    // Rebuild lambda of raised vertices from neighbors one hop closer; those
    // are either untouched by the swap or raised vertices handled earlier.
    for (Vertex x : raised) {
        std::uint64_t *b = bits(x);
        for (Vertex y : g_->neighbors(x)) {
            ++acc.work;
            if (dist_[y] + 1 == dist_[x])
                for (std::size_t w = 0; w < words_; ++w)
                    b[w] |= bits(y)[w];
        }
        if (std::all_of(b, b + words_, [](std::uint64_t w) { return w == 0; }))
            throw std::logic_error("inconsistent Local-Swaps state: empty lambda after repair");
    }

    recount_exclusive();
    acc.work += n * words_;
    farness_ -= static_cast<double>(acc.delta);
    return acc;
}

SearchResult local_swaps(const Graph &g, std::size_t k, const LocalSwapOptions &options,
                         const LocalSwapObserver &observer) {
    const std::size_t n = g.num_vertices();
    if (g.weighted())
        throw WeightedGraphError("Local-Swaps requires an unweighted graph");
    if (k < 1 || k >= n)
        throw std::invalid_argument("group size must satisfy 1 <= k < n");

    Rng rng(options.seed);
    SearchResult result;
    result.initial = options.initial ? *options.initial : rng.sample(n, k);
    std::sort(result.initial.begin(), result.initial.end());
    if (result.initial.size() != k)
        throw std::invalid_argument("initial group size differs from k");

    LsState state(g, result.initial);
    result.trace.push_back(state.farness());

    auto swap = [&](const SwapCandidate &c) {
        if (observer.before_swap)
            observer.before_swap(state, c);
        const auto acc = state.apply_swap(c.u, c.v);
        if (observer.after_swap)
            observer.after_swap(state, acc);
        return acc;
    };

    while (result.exchanges < options.max_exchanges) {
        const auto dag = build_group_dag(g, state.distances());
        const auto reach = estimate_reach_sizes(dag, options.reach, rng.next());
        const auto candidate = state.select_swap(reach, options.variant);
        if (!candidate)
            break;
        if (swap(*candidate).delta <= 0) {
            swap(SwapCandidate{candidate->v, candidate->u, 0});
            break;
        }
        ++result.exchanges;
        result.trace.push_back(state.farness());
    }

    result.group.assign(state.group().begin(), state.group().end());
    std::sort(result.group.begin(), result.group.end());
    result.farness = state.farness();
    return result;
}

} // namespace gclose
