#include <gclose/graph.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <queue>
#include <string>

namespace gclose {

namespace {

// Splits one line into whitespace-separated tokens (no allocation per token).
std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

template <class T>
bool parse_number(std::string_view token, T &value) {
    const char *first = token.data();
    const char *last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc() && ptr == last;
}

std::uint64_t parse_id(std::string_view token, std::size_t line_no) {
    std::uint64_t id;
    if (!parse_number(token, id))
        throw ParseError(line_no, "invalid vertex id '" + std::string(token) + "'");
    return id;
}

Weight parse_weight(std::string_view token, std::size_t line_no) {
    Weight w;
    if (!parse_number(token, w))
        throw ParseError(line_no, "invalid weight '" + std::string(token) + "'");
    if (!(w > 0))
        throw ParseError(line_no, "non-positive weight '" + std::string(token) + "'");
    return w;
}

template <class LineFn>
void for_each_line(std::string_view text, LineFn &&fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        fn(line, line_no);
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
}

std::string slurp(std::istream &in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, bool weighted) {
    if (n >= kNoVertex)
        throw std::invalid_argument("too many vertices");

    std::vector<Edge> arcs;
    arcs.reserve(2 * edges.size());
    for (const Edge &e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (!(e.w > 0))
            throw std::invalid_argument("non-positive edge weight");
        if (e.u == e.v)
            continue;
        const Weight w = weighted ? e.w : 1;
        arcs.push_back({e.u, e.v, w});
        arcs.push_back({e.v, e.u, w});
    }
    std::sort(arcs.begin(), arcs.end(), [](const Edge &a, const Edge &b) {
        if (a.u != b.u)
            return a.u < b.u;
        if (a.v != b.v)
            return a.v < b.v;
        return a.w < b.w;
    });
    // After sorting, the first of each (u, v) run carries the minimum weight.
    arcs.erase(std::unique(arcs.begin(), arcs.end(),
                           [](const Edge &a, const Edge &b) { return a.u == b.u && a.v == b.v; }),
               arcs.end());

    Graph g;
    g.weighted_ = weighted;
    g.offsets_.assign(n + 1, 0);
    g.targets_.reserve(arcs.size());
    g.weights_.reserve(arcs.size());
    for (const Edge &a : arcs) {
        ++g.offsets_[a.u + 1];
        g.targets_.push_back(a.v);
        g.weights_.push_back(a.w);
    }
    for (std::size_t v = 0; v < n; ++v)
        g.offsets_[v + 1] += g.offsets_[v];
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (Vertex u = 0; u < num_vertices(); ++u) {
        const auto nbrs = neighbors(u);
        const auto ws = weights(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            if (u < nbrs[i])
                out.push_back({u, nbrs[i], ws[i]});
    }
    return out;
}

Graph parse_dimacs_gr(std::string_view text) {
    bool have_header = false;
    std::uint64_t n = 0;
    std::vector<Edge> edges;

    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        const auto tok = tokenize(line);
        if (tok.empty() || tok[0] == "c")
            return;
        if (tok[0] == "p") {
            if (have_header)
                throw ParseError(line_no, "duplicate problem line");
            std::uint64_t m;
            if (tok.size() != 4 || tok[1] != "sp" || !parse_number(tok[2], n)
                || !parse_number(tok[3], m))
                throw ParseError(line_no, "malformed header, expected 'p sp <n> <m>'");
            if (n >= kNoVertex)
                throw ParseError(line_no, "vertex count too large");
            have_header = true;
            edges.reserve(m);
            return;
        }
        if (tok[0] == "a") {
            if (!have_header)
                throw ParseError(line_no, "arc before problem line");
            if (tok.size() != 4)
                throw ParseError(line_no, "malformed arc, expected 'a <u> <v> <w>'");
            const auto u = parse_id(tok[1], line_no);
            const auto v = parse_id(tok[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex id out of range [1, " + std::to_string(n) + "]");
            const Weight w = parse_weight(tok[3], line_no);
            edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), w});
            return;
        }
        throw ParseError(line_no, "unexpected line type '" + std::string(tok[0]) + "'");
    });

    if (!have_header)
        throw ParseError(1, "missing problem line");
    return Graph::from_edges(n, edges, true);
}

Graph parse_dimacs_gr(std::istream &in) { return parse_dimacs_gr(slurp(in)); }

Graph parse_edge_list(std::string_view text, bool weighted) {
    std::vector<Edge> edges;
    std::uint64_t n = 0;
    const std::size_t expected = weighted ? 3 : 2;

    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        const auto tok = tokenize(line);
        if (tok.empty() || tok[0].front() == '%' || tok[0].front() == '#')
            return;
        if (tok.size() != expected)
            throw ParseError(line_no, "expected " + std::to_string(expected) + " tokens, got "
                                          + std::to_string(tok.size()));
        const auto u = parse_id(tok[0], line_no);
        const auto v = parse_id(tok[1], line_no);
        if (std::max(u, v) + 1 >= kNoVertex)
            throw ParseError(line_no, "vertex id too large");
        const Weight w = weighted ? parse_weight(tok[2], line_no) : 1;
        n = std::max(n, std::max(u, v) + 1);
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
    });

    return Graph::from_edges(n, edges, weighted);
}

Graph parse_edge_list(std::istream &in, bool weighted) {
    return parse_edge_list(slurp(in), weighted);
}

void write_edge_list(std::ostream &out, const Graph &g) {
    char buf[64];
    for (const Edge &e : g.edges()) {
        out << e.u << ' ' << e.v;
        if (g.weighted()) {
            auto res = std::to_chars(buf, buf + sizeof(buf), e.w);
            out << ' ' << std::string_view(buf, res.ptr - buf);
        }
        out << '\n';
    }
}

namespace {

// Component label per vertex, labels assigned in order of smallest member.
std::vector<Vertex> label_components(const Graph &g, std::vector<std::size_t> &sizes) {
    const std::size_t n = g.num_vertices();
    std::vector<Vertex> label(n, kNoVertex);
    std::vector<Vertex> queue;
    queue.reserve(n);
    sizes.clear();
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != kNoVertex)
            continue;
        const auto id = static_cast<Vertex>(sizes.size());
        queue.clear();
        queue.push_back(s);
        label[s] = id;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (Vertex y : g.neighbors(queue[head]))
                if (label[y] == kNoVertex) {
                    label[y] = id;
                    queue.push_back(y);
                }
        sizes.push_back(queue.size());
    }
    return label;
}

// Hop distances from s; returns the lowest-id vertex at maximum distance.
std::pair<Vertex, std::size_t> farthest_hops(const Graph &g, Vertex s,
                                             std::vector<std::size_t> &hops) {
    hops.assign(g.num_vertices(), std::numeric_limits<std::size_t>::max());
    std::queue<Vertex> queue;
    hops[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
        const Vertex x = queue.front();
        queue.pop();
        for (Vertex y : g.neighbors(x))
            if (hops[y] == std::numeric_limits<std::size_t>::max()) {
                hops[y] = hops[x] + 1;
                queue.push(y);
            }
    }
    Vertex far = s;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (hops[v] != std::numeric_limits<std::size_t>::max() && hops[v] > hops[far])
            far = v;
    return {far, hops[far]};
}

} // namespace

ComponentExtraction largest_connected_component(const Graph &g) {
    const std::size_t n = g.num_vertices();
    if (n == 0)
        throw std::invalid_argument("empty graph");

    std::vector<std::size_t> sizes;
    const auto label = label_components(g, sizes);
    const auto best = static_cast<Vertex>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

    ComponentExtraction out;
    out.old_to_new.assign(n, kNoVertex);
    for (Vertex v = 0; v < n; ++v)
        if (label[v] == best) {
            out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }

    std::vector<Edge> edges;
    for (const Edge &e : g.edges())
        if (label[e.u] == best)
            edges.push_back({out.old_to_new[e.u], out.old_to_new[e.v], e.w});
    out.graph = Graph::from_edges(out.new_to_old.size(), edges, g.weighted());
    return out;
}

bool is_connected(const Graph &g) {
    std::vector<std::size_t> sizes;
    label_components(g, sizes);
    return sizes.size() <= 1;
}

std::size_t estimate_diameter(const Graph &g) {
    if (g.num_vertices() == 0)
        return 0;
    std::vector<std::size_t> hops;
    const Vertex far = farthest_hops(g, 0, hops).first;
    return farthest_hops(g, far, hops).second;
}

} // namespace gclose
