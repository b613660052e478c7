#include <gclose/reach.hpp>

#include <algorithm>
#include <stdexcept>

#include <gclose/random.hpp>

namespace gclose {

namespace {

void check_params(const ReachParams &params) {
    if (params.samples == 0)
        throw std::invalid_argument("reach estimation needs at least one sample");
    if (params.width != 8 && params.width != 16 && params.width != 32)
        throw std::invalid_argument("reach label width must be 8, 16 or 32 bits");
}

template <std::size_t Lanes>
void min_lanes(std::uint32_t *__restrict dst, const std::uint32_t *__restrict src) {
    for (std::size_t i = 0; i < Lanes; ++i)
        dst[i] = std::min(dst[i], src[i]);
}

void min_lanes(std::uint32_t *dst, const std::uint32_t *src, std::size_t lanes) {
    for (std::size_t i = 0; i < lanes; ++i)
        dst[i] = std::min(dst[i], src[i]);
}

} // namespace

ReachEstimate ReachEstimate::from_exact(std::span<const std::uint64_t> sizes) {
    return ReachEstimate(std::vector<double>(sizes.begin(), sizes.end()), 0, 0);
}

std::vector<std::uint32_t> draw_reach_labels(std::size_t n, const ReachParams &params,
                                             std::uint64_t seed) {
    check_params(params);
    Rng rng(seed);
    std::vector<std::uint32_t> labels(n * params.samples);
    const unsigned shift = 64 - params.width;
    for (auto &label : labels)
        label = static_cast<std::uint32_t>(rng.next() >> shift);
    return labels;
}

void propagate_minima(const GroupDag &dag, std::span<std::uint32_t> labels, std::size_t samples) {
    if (labels.size() != dag.num_vertices() * samples)
        throw std::invalid_argument("label array does not match the DAG");
    std::uint32_t *base = labels.data();
    // Successors precede their predecessors in reverse topological order, so
    // each successor already holds its final minima when it is read.
    for (Vertex x : dag.reverse_topological_order()) {
        std::uint32_t *dst = base + x * samples;
        for (Vertex y : dag.successors(x)) {
            const std::uint32_t *src = base + y * samples;
            if (samples == 16)
                min_lanes<16>(dst, src);
            else
                min_lanes(dst, src, samples);
        }
    }
}

double reach_from_minima(std::span<const std::uint32_t> minima, unsigned width) {
    const double s = static_cast<double>(minima.size());
    double sum = 0;
    for (std::uint32_t m : minima)
        sum += m;
    const double range = static_cast<double>(std::uint64_t{1} << width);
    return std::max(1.0, s * range / (sum + s) - 1.0);
}

ReachEstimate estimate_reach_sizes(const GroupDag &dag, const ReachParams &params,
                                   std::uint64_t seed) {
    const std::size_t n = dag.num_vertices();
    auto labels = draw_reach_labels(n, params, seed);
    propagate_minima(dag, labels, params.samples);

    std::vector<double> est(n);
    const std::span<const std::uint32_t> all(labels);
    for (Vertex v = 0; v < n; ++v)
        est[v] = reach_from_minima(all.subspan(v * params.samples, params.samples), params.width);
    return ReachEstimate(std::move(est), params.samples, params.width);
}

std::vector<std::uint64_t> exact_reach_sizes(const GroupDag &dag) {
    const std::size_t n = dag.num_vertices();
    if (n > kExactReachCap)
        throw OracleLimitError("exact reachability oracle is capped at "
                               + std::to_string(kExactReachCap) + " vertices");
    std::vector<std::uint64_t> sizes(n, 0);
    std::vector<Vertex> mark(n, kNoVertex);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v) {
        stack.assign(1, v);
        mark[v] = v;
        std::uint64_t count = 0;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            ++count;
            for (Vertex y : dag.successors(x))
                if (mark[y] != v) {
                    mark[y] = v;
                    stack.push_back(y);
                }
        }
        sizes[v] = count;
    }
    return sizes;
}

} // namespace gclose
