#ifndef GCLOSE_GENERATORS_HPP_
#define GCLOSE_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>

#include <gclose/graph.hpp>

namespace gclose {

// Small synthetic families for tests and benchmarks. All are deterministic
// for a fixed seed.

/// rows x cols 4-neighbor mesh; vertex (i, j) has id i * cols + j.
Graph grid_graph(std::size_t rows, std::size_t cols);

/// Erdos-Renyi G(n, p); may be disconnected.
Graph gnp_graph(std::size_t n, double p, std::uint64_t seed);

/// Random recursive tree plus @p extra uniformly random extra edges; connected.
Graph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed);

/// Barabasi-Albert preferential attachment: each new vertex links to
/// @p attach distinct earlier vertices chosen proportionally to degree.
Graph preferential_attachment_graph(std::size_t n, std::size_t attach, std::uint64_t seed);

/// Same topology with independent integer weights uniform in [lo, hi].
Graph with_random_weights(const Graph &g, std::uint32_t lo, std::uint32_t hi, std::uint64_t seed);

} // namespace gclose

#endif // GCLOSE_GENERATORS_HPP_
