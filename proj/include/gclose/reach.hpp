#ifndef GCLOSE_REACH_HPP_
#define GCLOSE_REACH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gclose/sssp.hpp>
#include <gclose/types.hpp>

namespace gclose {

struct ReachParams {
    std::size_t samples = 16;
    unsigned width = 16; // bits per random label: 8, 16 or 32
};

/// Approximate |D_v| (vertices reachable from v in a group DAG) per vertex.
class ReachEstimate {
public:
    ReachEstimate() = default;
    ReachEstimate(std::vector<double> values, std::size_t samples, unsigned width)
        : values_(std::move(values)), samples_(samples), width_(width) {}

    /// Wraps exact sizes, e.g. for deterministic tests of candidate selection.
    static ReachEstimate from_exact(std::span<const std::uint64_t> sizes);

    double operator[](Vertex v) const noexcept { return values_[v]; }
    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::size_t samples() const noexcept { return samples_; }
    unsigned width() const noexcept { return width_; }

private:
    std::vector<double> values_;
    std::size_t samples_ = 0;
    unsigned width_ = 0;
};

/// Lane-interleaved labels: labels[v * samples + i] is uniform in [0, 2^width).
std::vector<std::uint32_t> draw_reach_labels(std::size_t n, const ReachParams &params,
                                             std::uint64_t seed);

/// Replaces every label of v by the minimum over D_v, all lanes in one sweep.
void propagate_minima(const GroupDag &dag, std::span<std::uint32_t> labels, std::size_t samples);

/// Averaging estimator over the per-lane minima of one vertex:
/// s * 2^width / (sum + s) - 1, clamped below at 1.
double reach_from_minima(std::span<const std::uint32_t> minima, unsigned width);

/// Random-minima sketch of all reachability-set sizes in one DAG traversal.
/// Deterministic for a fixed seed.
ReachEstimate estimate_reach_sizes(const GroupDag &dag, const ReachParams &params,
                                   std::uint64_t seed);

inline constexpr std::size_t kExactReachCap = 5000;

/// Exact |D_v| by one traversal per vertex. Test oracle; throws
/// OracleLimitError above kExactReachCap vertices.
std::vector<std::uint64_t> exact_reach_sizes(const GroupDag &dag);

} // namespace gclose

#endif // GCLOSE_REACH_HPP_
