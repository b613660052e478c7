#include <gclose/grow_shrink.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include <gclose/objective.hpp>
#include <gclose/random.hpp>

namespace gclose {

GsState::GsState(const Graph &g, std::span<const Vertex> group)
    : g_(&g), group_(group.begin(), group.end()) {
    const std::size_t n = g.num_vertices();
    if (group_.empty())
        throw std::invalid_argument("empty group");
    index_.assign(n, kNoVertex);
    for (std::size_t i = 0; i < group_.size(); ++i) {
        if (group_[i] >= n)
            throw std::invalid_argument("group vertex out of range");
        if (index_[group_[i]] != kNoVertex)
            throw std::invalid_argument("repeated group vertex");
        index_[group_[i]] = static_cast<Vertex>(i);
    }

    d_.assign(n, kInfDistance);
    d2_.assign(n, kInfDistance);
    r_.assign(n, kNoVertex);
    r2_.assign(n, kNoVertex);

    // Members in increasing id with strict improvement: lowest-id ties.
    std::vector<Vertex> sorted(group_);
    std::sort(sorted.begin(), sorted.end());
    for (Vertex w : sorted) {
        const auto dist = single_source_sssp(g, w);
        for (Vertex x = 0; x < n; ++x) {
            if (dist[x] < d_[x]) {
                d2_[x] = d_[x];
                r2_[x] = r_[x];
                d_[x] = dist[x];
                r_[x] = w;
            } else if (dist[x] < d2_[x]) {
                d2_[x] = dist[x];
                r2_[x] = w;
            }
        }
    }
    farness_ = 0;
    for (Vertex x = 0; x < n; ++x) {
        if (d_[x] == kInfDistance)
            throw std::invalid_argument("Grow-Shrink requires a connected graph");
        farness_ += d_[x];
    }

    search_ = PrunedSearch(n);
    invalid_.assign(n, 0);
}

std::optional<Vertex> GsState::select_grow(const ReachEstimate &reach,
                                           GrowCandidates candidates) const {
    const std::size_t n = g_->num_vertices();
    if (reach.size() != n)
        throw std::invalid_argument("reach estimate does not match the graph");

    Vertex best = kNoVertex;
    double best_score = 0;
    auto consider = [&](Vertex v) {
        const double s = reach[v] * d_[v];
        if (best == kNoVertex || s > best_score || (s == best_score && v < best)) {
            best = v;
            best_score = s;
        }
    };

    if (candidates == GrowCandidates::global) {
        for (Vertex v = 0; v < n; ++v)
            if (!in_group(v))
                consider(v);
    } else {
        for (Vertex u : group_)
            for (Vertex v : g_->neighbors(u))
                if (!in_group(v))
                    consider(v);
    }
    if (best == kNoVertex || !(best_score > 0))
        return std::nullopt;
    return best;
}

GrowStep GsState::grow(Vertex v) {
    if (v >= g_->num_vertices() || in_group(v))
        throw std::invalid_argument("grow needs a non-member vertex");

    GrowStep step;
    step.added = v;
    // Past a vertex where v is no closer than d2, v cannot improve d or d2 of
    // anything reached through it.
    search_.run(
        *g_, v, [&](Vertex x, Distance t) { return t < d2_[x]; },
        [&](Vertex x, Distance t) {
            if (t < d_[x]) {
                step.delta_minus += d_[x] - t;
                d2_[x] = d_[x];
                r2_[x] = r_[x];
                d_[x] = t;
                r_[x] = v;
            } else {
                d2_[x] = t;
                r2_[x] = v;
            }
        });
    step.work = search_.work();

    index_[v] = static_cast<Vertex>(group_.size());
    group_.push_back(v);
    farness_ -= step.delta_minus;
    return step;
}

std::vector<double> GsState::delta_plus_all() const {
    if (group_.size() < 2)
        throw std::invalid_argument("delta_plus needs at least two members");
    std::vector<double> delta(group_.size(), 0.0);
    for (Vertex x = 0; x < g_->num_vertices(); ++x)
        delta[index_[r_[x]]] += d2_[x] - d_[x];
    return delta;
}

ShrinkStep GsState::shrink() {
    const auto delta = delta_plus_all();
    std::size_t best = 0;
    for (std::size_t i = 1; i < group_.size(); ++i)
        if (delta[i] < delta[best] || (delta[i] == delta[best] && group_[i] < group_[best]))
            best = i;
    return remove(group_[best]);
}

ShrinkStep GsState::remove(Vertex u) {
    const std::size_t n = g_->num_vertices();
    if (u >= n || !in_group(u))
        throw std::invalid_argument("remove needs a member vertex");
    if (group_.size() < 2)
        throw std::invalid_argument("cannot shrink a group of size 1");

    ShrinkStep step;
    step.removed = u;
    for (Vertex x = 0; x < n; ++x) {
        if (r_[x] == u) {
            step.delta_plus += d2_[x] - d_[x];
            d_[x] = d2_[x];
            r_[x] = r2_[x];
            step.repaired.push_back(x);
        } else if (r2_[x] == u) {
            step.repaired.push_back(x);
        }
    }
    step.work = n;

    const Vertex pos = index_[u];
    group_[pos] = group_.back();
    index_[group_[pos]] = pos;
    group_.pop_back();
    index_[u] = kNoVertex;
    farness_ += step.delta_plus;

    if (group_.size() == 1) {
        std::fill(d2_.begin(), d2_.end(), kInfDistance);
        std::fill(r2_.begin(), r2_.end(), kNoVertex);
        step.repaired.clear();
        for (Vertex x = 0; x < n; ++x)
            step.repaired.push_back(x);
        return step;
    }

    for (Vertex y : step.repaired) {
        d2_[y] = kInfDistance;
        r2_[y] = kNoVertex;
        invalid_[y] = 1;
    }

    // Seed every invalid y with its minimal boundary distance. d-boundary
    // pairs read d (already final), d2-boundary pairs only valid d2, so the
    // seeds can be written in place.
    using Entry = std::pair<Distance, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (Vertex y : step.repaired) {
        Distance best = kInfDistance;
        Vertex rep = kNoVertex;
        const auto nbrs = g_->neighbors(y);
        const auto ws = g_->weights(y);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const Vertex x = nbrs[i];
            Distance b;
            Vertex c;
            if (r_[x] != r_[y]) {
                b = d_[x] + ws[i];
                c = r_[x];
            } else if (!invalid_[x]) {
                b = d2_[x] + ws[i];
                c = r2_[x];
            } else {
                continue;
            }
            if (b < best || (b == best && c < rep)) {
                best = b;
                rep = c;
            }
        }
        step.work += 1 + nbrs.size();
        if (rep != kNoVertex) {
            d2_[y] = best;
            r2_[y] = rep;
            heap.emplace(best, y);
        }
    }

    while (!heap.empty()) {
        const auto [dx, x] = heap.top();
        heap.pop();
        if (dx > d2_[x])
            continue;
        ++step.work;
        const auto nbrs = g_->neighbors(x);
        const auto ws = g_->weights(x);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            ++step.work;
            const Vertex y = nbrs[i];
            if (r_[y] == r2_[x])
                continue;
            const Distance nd = dx + ws[i];
            if (nd < d2_[y]) {
                d2_[y] = nd;
                r2_[y] = r2_[x];
                heap.emplace(nd, y);
            }
        }
    }

    for (Vertex y : step.repaired) {
        invalid_[y] = 0;
        if (r2_[y] == kNoVertex)
            throw std::logic_error("Grow-Shrink repair left vertex " + std::to_string(y)
                                   + " without a second representative");
    }
    return step;
}

std::size_t grow_steps(const Graph &g, std::size_t k, const GrowShrinkOptions &options) {
    if (options.variant != GrowShrinkVariant::extended)
        return 1;
    if (options.h) {
        if (*options.h < 1)
            throw std::invalid_argument("h must be at least 1");
        return *options.h;
    }
    if (!std::isfinite(options.p) || options.p < 0)
        throw std::invalid_argument("p must be a finite non-negative number");
    const double diam = static_cast<double>(estimate_diameter(g));
    const double h = std::round(diam / std::pow(static_cast<double>(k), options.p));
    return std::max<std::size_t>(1, static_cast<std::size_t>(h));
}

SearchResult grow_shrink(const Graph &g, std::size_t k, const GrowShrinkOptions &options,
                         const GrowShrinkObserver &observer) {
    const std::size_t n = g.num_vertices();
    if (k < 1 || k >= n)
        throw std::invalid_argument("group size must satisfy 1 <= k < n");
    const std::size_t h = grow_steps(g, k, options);
    const auto candidates = options.variant == GrowShrinkVariant::gs ? GrowCandidates::global
                                                                      : GrowCandidates::local;

    Rng rng(options.seed);
    SearchResult result;
    result.initial = options.initial ? *options.initial : rng.sample(n, k);
    std::sort(result.initial.begin(), result.initial.end());
    if (result.initial.size() != k)
        throw std::invalid_argument("initial group size differs from k");

    GsState state(g, result.initial);
    result.trace.push_back(state.farness());

    while (result.exchanges < options.max_exchanges) {
        const double before = state.farness();
        std::vector<Vertex> snapshot(state.group().begin(), state.group().end());

        for (std::size_t i = 0; i < h; ++i) {
            const auto dag = build_group_dag(g, DistanceField(state.d().begin(), state.d().end()));
            const auto reach = estimate_reach_sizes(dag, options.reach, rng.next());
            const auto v = state.select_grow(reach, candidates);
            if (!v)
                break;
            const auto step = state.grow(*v);
            if (observer.after_grow)
                observer.after_grow(state, step);
        }
        while (state.size() > k) {
            const auto step = state.shrink();
            if (observer.after_shrink)
                observer.after_shrink(state, step);
        }

        if (!(state.farness() < before)) {
            state = GsState(g, snapshot);
            break;
        }
        ++result.exchanges;
        result.trace.push_back(state.farness());
    }

    result.group.assign(state.group().begin(), state.group().end());
    std::sort(result.group.begin(), result.group.end());
    result.farness = farness(g, result.group);
    return result;
}

} // namespace gclose
