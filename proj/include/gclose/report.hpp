#ifndef GCLOSE_REPORT_HPP_
#define GCLOSE_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gclose/types.hpp>

namespace gclose {

/// Result of one maximization run as printed by the command-line tool.
///
/// JSON layout (fields in this order):
///   algorithm, params {k, variant, h, p, samples, width, max_exchanges, seed},
///   graph {n, m, weighted}, group, farness, closeness, exchanges, trace,
///   duration_ms
/// h and p are null unless the algorithm uses them.
struct RunReport {
    std::string algorithm;
    std::size_t k = 0;
    std::string variant;
    std::optional<std::size_t> h;
    std::optional<double> p;
    std::size_t samples = 16;
    unsigned width = 16;
    std::size_t max_exchanges = 100;
    std::uint64_t seed = 1;

    std::size_t n = 0;
    std::size_t m = 0;
    bool weighted = false;

    std::vector<Vertex> group; // sorted
    double farness = 0;
    double closeness = 0;
    std::size_t exchanges = 0;
    std::vector<double> trace;
    double duration_ms = 0;
};

std::string to_json(const RunReport &report);

/// Header line plus one data row; group and trace are space-separated lists.
std::string to_csv(const RunReport &report);

} // namespace gclose

#endif // GCLOSE_REPORT_HPP_
