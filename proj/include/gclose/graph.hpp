#ifndef GCLOSE_GRAPH_HPP_
#define GCLOSE_GRAPH_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include <gclose/types.hpp>

namespace gclose {

struct Edge {
    Vertex u;
    Vertex v;
    Weight w = 1;
};

/**
 * Immutable undirected graph in compressed adjacency form.
 *
 * Every edge is stored in both directions, neighbor lists are sorted, there are
 * no self-loops or parallel edges and all weights are strictly positive. For
 * unweighted graphs every weight is exactly 1.
 */
class Graph {
public:
    Graph() = default;

    /// Canonicalizes @p edges: symmetrizes, drops self-loops and keeps the
    /// minimum weight among parallel edges. Weights are forced to 1 when
    /// @p weighted is false. Throws std::invalid_argument on out-of-range ids
    /// or non-positive weights.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges, bool weighted);

    std::size_t num_vertices() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t num_edges() const noexcept { return targets_.size() / 2; }
    bool weighted() const noexcept { return weighted_; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    std::span<const Weight> weights(Vertex v) const noexcept {
        return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(Vertex u, Vertex v) const;

    /// Each undirected edge once, with u < v, sorted.
    std::vector<Edge> edges() const;

    bool operator==(const Graph &other) const = default;

private:
    bool weighted_ = false;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
    std::vector<Weight> weights_;
};

/// 9th DIMACS challenge `.gr` format (1-based ids, `p sp n m`, `a u v w`).
/// The result is always flagged weighted.
Graph parse_dimacs_gr(std::string_view text);
Graph parse_dimacs_gr(std::istream &in);

/// Whitespace separated `u v [w]` lines with 0-based ids; `%` and `#` start
/// comment lines.
Graph parse_edge_list(std::string_view text, bool weighted);
Graph parse_edge_list(std::istream &in, bool weighted);

/// Inverse of parse_edge_list (weights written iff the graph is weighted).
void write_edge_list(std::ostream &out, const Graph &g);

struct ComponentExtraction {
    Graph graph;
    /// Old id -> new id, kNoVertex for dropped vertices.
    std::vector<Vertex> old_to_new;
    /// New id -> old id.
    std::vector<Vertex> new_to_old;
};

/// Induced subgraph on the largest connected component, relabeled in
/// increasing old-id order. Equal sizes go to the component holding the
/// smallest id.
ComponentExtraction largest_connected_component(const Graph &g);

bool is_connected(const Graph &g);

/// Double-sweep hop-diameter lower bound: BFS from vertex 0, then from the
/// (lowest-id) farthest vertex found. Edge weights are ignored.
std::size_t estimate_diameter(const Graph &g);

} // namespace gclose

#endif // GCLOSE_GRAPH_HPP_
