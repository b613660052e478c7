#ifndef GCLOSE_OBJECTIVE_HPP_
#define GCLOSE_OBJECTIVE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include <gclose/graph.hpp>
#include <gclose/types.hpp>

namespace gclose {

struct GroupScore {
    double farness = 0;
    double closeness = 0;
};

/// Sum over non-members of the distance to the nearest member. Throws
/// std::invalid_argument on an empty group, repeated or out-of-range ids.
double farness(const Graph &g, std::span<const Vertex> group);

/// |V| / farness (infinite when the group is all of V).
double closeness(const Graph &g, std::span<const Vertex> group);

GroupScore score(const Graph &g, std::span<const Vertex> group);

/// f(S) - f(S + v), v outside S, from two full evaluations.
double delta_minus_exact(const Graph &g, std::span<const Vertex> group, Vertex v);

/// f(S - u) - f(S), u in S and |S| >= 2, from two full evaluations.
double delta_plus_exact(const Graph &g, std::span<const Vertex> group, Vertex u);

struct OptimumGroup {
    std::vector<Vertex> group;
    double farness = 0;
};

inline constexpr double kEnumerationCap = 1e7;

/// Number of size-k subsets of n elements, as a double (saturates at +inf).
double binomial(std::size_t n, std::size_t k);

/// Lexicographically smallest size-k group of minimum farness, by full
/// enumeration. Throws OracleLimitError when C(n, k) exceeds kEnumerationCap.
OptimumGroup brute_force_optimum(const Graph &g, std::size_t k);

} // namespace gclose

#endif // GCLOSE_OBJECTIVE_HPP_
