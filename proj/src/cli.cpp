#include <gclose/cli.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include <gclose/generators.hpp>
#include <gclose/graph.hpp>
#include <gclose/greedy.hpp>
#include <gclose/grow_shrink.hpp>
#include <gclose/local_swaps.hpp>
#include <gclose/objective.hpp>
#include <gclose/report.hpp>

namespace gclose {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string path;
    std::string format = "edgelist";
};

void add_input_flags(CLI::App &cmd, InputOptions &opt) {
    cmd.add_option("--input", opt.path, "graph file, or - for standard input")->required();
    cmd.add_option("--format", opt.format, "input format")
        ->check(CLI::IsMember({"dimacs9", "edgelist", "edgelist-weighted"}));
}

Graph parse_stream(std::istream &s, const std::string &format) {
    if (format == "dimacs9")
        return parse_dimacs_gr(s);
    return parse_edge_list(s, format == "edgelist-weighted");
}

// Loaded graph restricted to its largest component.
struct LoadedGraph {
    std::size_t input_vertices = 0;
    ComponentExtraction lcc;
    const Graph &graph() const { return lcc.graph; }
};

LoadedGraph load(const InputOptions &opt, std::istream &in) {
    Graph g;
    if (opt.path == "-") {
        g = parse_stream(in, opt.format);
    } else {
        std::ifstream file(opt.path);
        if (!file)
            throw UsageError("cannot open " + opt.path);
        g = parse_stream(file, opt.format);
    }
    if (g.num_vertices() == 0)
        throw UsageError("input graph has no vertices");
    return {g.num_vertices(), largest_connected_component(g)};
}

std::vector<Vertex> to_input_ids(const LoadedGraph &lg, std::span<const Vertex> group) {
    std::vector<Vertex> out;
    out.reserve(group.size());
    for (Vertex v : group)
        out.push_back(lg.lcc.new_to_old[v]);
    std::sort(out.begin(), out.end());
    return out;
}

void check_k(const Graph &g, std::size_t k) {
    if (k < 1 || k >= g.num_vertices())
        throw UsageError("--k must satisfy 1 <= k < n (n = " + std::to_string(g.num_vertices())
                         + " in the largest component)");
}

nlohmann::ordered_json graph_json(const Graph &g) {
    return {{"n", g.num_vertices()}, {"m", g.num_edges()}, {"weighted", g.weighted()}};
}

void emit(std::ostream &out, const nlohmann::ordered_json &j) { out << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

struct MaximizeOptions {
    InputOptions input;
    std::string algo;
    std::size_t k = 0;
    std::uint64_t seed = 1;
    std::size_t samples = 16;
    unsigned width = 16;
    std::size_t max_exchanges = 100;
    std::optional<std::size_t> h;
    std::optional<double> p;
    std::string output = "json";
};

const std::map<std::string, SwapVariant> kSwapAlgos = {
    {"ls", SwapVariant::base},
    {"ls-restrict", SwapVariant::restricted},
    {"ls-semilocal", SwapVariant::semi_local},
};

const std::map<std::string, GrowShrinkVariant> kGrowAlgos = {
    {"gs", GrowShrinkVariant::gs},
    {"gs-local", GrowShrinkVariant::local},
    {"gs-extended", GrowShrinkVariant::extended},
};

std::string variant_name(const std::string &algo) {
    if (algo == "greedy")
        return "greedy";
    if (algo == "ls")
        return "base";
    if (algo == "ls-restrict")
        return "restricted";
    if (algo == "ls-semilocal")
        return "semi-local";
    if (algo == "gs")
        return "gs";
    if (algo == "gs-local")
        return "local";
    return "extended";
}

int cmd_maximize(const MaximizeOptions &opt, std::istream &in, std::ostream &out,
                 std::ostream &err) {
    if ((opt.h || opt.p) && opt.algo != "gs-extended")
        throw UsageError("--h and --p apply to gs-extended only");
    if (opt.width != 8 && opt.width != 16 && opt.width != 32)
        throw UsageError("--width must be 8, 16 or 32");
    if (opt.samples < 1)
        throw UsageError("--samples must be positive");

    const auto lg = load(opt.input, in);
    const Graph &g = lg.graph();
    check_k(g, opt.k);
    if (kSwapAlgos.count(opt.algo) && g.weighted())
        throw WeightedGraphError(opt.algo + " supports unweighted graphs only");

    RunReport report;
    report.algorithm = opt.algo;
    report.k = opt.k;
    report.variant = variant_name(opt.algo);
    report.samples = opt.samples;
    report.width = opt.width;
    report.max_exchanges = opt.max_exchanges;
    report.seed = opt.seed;
    report.n = g.num_vertices();
    report.m = g.num_edges();
    report.weighted = g.weighted();

    const ReachParams reach{opt.samples, opt.width};
    std::vector<Vertex> group;
    double claimed = 0;
    const auto start = std::chrono::steady_clock::now();
    if (opt.algo == "greedy") {
        auto res = greedy_group(g, opt.k);
        group = std::move(res.group);
        report.trace = std::move(res.trace);
        claimed = report.trace.back();
    } else if (auto it = kSwapAlgos.find(opt.algo); it != kSwapAlgos.end()) {
        LocalSwapOptions lo;
        lo.variant = it->second;
        lo.max_exchanges = opt.max_exchanges;
        lo.reach = reach;
        lo.seed = opt.seed;
        auto res = local_swaps(g, opt.k, lo);
        group = std::move(res.group);
        report.exchanges = res.exchanges;
        report.trace = std::move(res.trace);
        claimed = res.farness;
    } else {
        GrowShrinkOptions go;
        go.variant = kGrowAlgos.at(opt.algo);
        go.h = opt.h;
        if (opt.p)
            go.p = *opt.p;
        go.max_exchanges = opt.max_exchanges;
        go.reach = reach;
        go.seed = opt.seed;
        if (go.variant == GrowShrinkVariant::extended) {
            report.h = grow_steps(g, opt.k, go);
            if (!go.h)
                report.p = go.p;
        }
        auto res = grow_shrink(g, opt.k, go);
        group = std::move(res.group);
        report.exchanges = res.exchanges;
        report.trace = std::move(res.trace);
        claimed = res.farness;
    }
    const auto stop = std::chrono::steady_clock::now();
    report.duration_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    // Self-audit: the printed numbers come from a fresh evaluation.
    const auto fresh = score(g, group);
    if (std::abs(fresh.farness - claimed) > 1e-9 * std::max(1.0, fresh.farness)) {
        err << "internal error: algorithm reported farness " << claimed
            << " but the group evaluates to " << fresh.farness << '\n';
        return kExitInternal;
    }
    report.farness = fresh.farness;
    report.closeness = fresh.closeness;
    report.group = to_input_ids(lg, group);

    out << (opt.output == "csv" ? to_csv(report) : to_json(report));
    return kExitOk;
}

// ---------------------------------------------------------------------------

std::vector<Vertex> parse_group(const std::string &text) {
    std::vector<Vertex> ids;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        const char *first = text.data() + pos;
        const char *last = text.data() + end;
        Vertex v = 0;
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || res.ptr != last)
            throw UsageError("bad vertex id '" + std::string(first, last) + "' in --group");
        ids.push_back(v);
        pos = end + 1;
    }
    return ids;
}

int cmd_evaluate(const InputOptions &input, const std::string &group_text, std::istream &in,
                 std::ostream &out) {
    const auto ids = parse_group(group_text);
    const auto lg = load(input, in);
    std::vector<Vertex> group;
    for (Vertex v : ids) {
        if (v >= lg.input_vertices)
            throw UsageError("vertex " + std::to_string(v) + " out of range (n = "
                             + std::to_string(lg.input_vertices) + ")");
        if (lg.lcc.old_to_new[v] == kNoVertex)
            throw UsageError("vertex " + std::to_string(v)
                             + " is not in the largest connected component");
        group.push_back(lg.lcc.old_to_new[v]);
    }
    const auto s = score(lg.graph(), group);
    nlohmann::ordered_json j;
    j["group"] = to_input_ids(lg, group);
    j["farness"] = s.farness;
    j["closeness"] = std::isfinite(s.closeness) ? nlohmann::ordered_json(s.closeness)
                                                : nlohmann::ordered_json(nullptr);
    j["graph"] = graph_json(lg.graph());
    emit(out, j);
    return kExitOk;
}

int cmd_oracle(const InputOptions &input, std::size_t k, std::istream &in, std::ostream &out) {
    const auto lg = load(input, in);
    check_k(lg.graph(), k);
    const auto best = brute_force_optimum(lg.graph(), k);
    const auto s = score(lg.graph(), best.group);
    nlohmann::ordered_json j;
    j["k"] = k;
    j["group"] = to_input_ids(lg, best.group);
    j["farness"] = s.farness;
    j["closeness"] = s.closeness;
    j["graph"] = graph_json(lg.graph());
    emit(out, j);
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct GenOptions {
    std::string model;
    std::size_t n = 100;
    double p = 0.05;
    std::size_t rows = 10;
    std::size_t cols = 10;
    std::size_t attach = 2;
    std::uint32_t max_weight = 0;
    std::uint64_t seed = 1;
};

int cmd_gen(const GenOptions &opt, std::ostream &out) {
    Graph g;
    if (opt.model == "gnp")
        g = gnp_graph(opt.n, opt.p, opt.seed);
    else if (opt.model == "grid")
        g = grid_graph(opt.rows, opt.cols);
    else
        g = preferential_attachment_graph(opt.n, opt.attach, opt.seed);
    if (opt.max_weight > 0)
        g = with_random_weights(g, 1, opt.max_weight, opt.seed ^ 0x9e3779b97f4a7c15ULL);
    write_edge_list(out, g);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err) {
    CLI::App app{"Group closeness maximization", "gclose"};
    // --h is the grow-step flag, so help is long-form only.
    app.set_help_flag("--help", "print this help");
    app.require_subcommand(1);

    MaximizeOptions mx;
    auto *maximize = app.add_subcommand("maximize", "run a heuristic and print a report");
    maximize->set_help_flag("--help", "print this help");
    add_input_flags(*maximize, mx.input);
    maximize->add_option("--algo", mx.algo)
        ->required()
        ->check(CLI::IsMember({"greedy", "ls", "ls-restrict", "ls-semilocal", "gs", "gs-local",
                               "gs-extended"}));
    maximize->add_option("--k", mx.k, "group size")->required();
    maximize->add_option("--seed", mx.seed)->capture_default_str();
    maximize->add_option("--samples", mx.samples, "reachability sketch samples")
        ->capture_default_str();
    maximize->add_option("--width", mx.width, "bits per sketch label")->capture_default_str();
    maximize->add_option("--max-exchanges", mx.max_exchanges)->capture_default_str();
    auto *h_opt = maximize->add_option("--h", mx.h, "grow steps per round (gs-extended)");
    auto *p_opt = maximize->add_option("--p", mx.p, "h = diam / k^p (gs-extended, default 0.75)");
    h_opt->excludes(p_opt);
    maximize->add_option("--output", mx.output)
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    InputOptions ev_input;
    std::string ev_group;
    auto *evaluate = app.add_subcommand("evaluate", "farness and closeness of a given group");
    evaluate->set_help_flag("--help", "print this help");
    add_input_flags(*evaluate, ev_input);
    evaluate->add_option("--group", ev_group, "comma-separated vertex ids")->required();

    InputOptions or_input;
    std::size_t or_k = 0;
    auto *oracle = app.add_subcommand("oracle", "exact optimum by enumeration (small graphs)");
    oracle->set_help_flag("--help", "print this help");
    add_input_flags(*oracle, or_input);
    oracle->add_option("--k", or_k)->required();

    GenOptions gen_opt;
    auto *gen = app.add_subcommand("gen", "write a synthetic edge list");
    gen->set_help_flag("--help", "print this help");
    gen->add_option("--model", gen_opt.model)
        ->required()
        ->check(CLI::IsMember({"gnp", "grid", "pa"}));
    gen->add_option("--n", gen_opt.n)->capture_default_str();
    gen->add_option("--p", gen_opt.p, "edge probability (gnp)")->capture_default_str();
    gen->add_option("--rows", gen_opt.rows)->capture_default_str();
    gen->add_option("--cols", gen_opt.cols)->capture_default_str();
    gen->add_option("--attach", gen_opt.attach, "edges per new vertex (pa)")
        ->capture_default_str();
    gen->add_option("--max-weight", gen_opt.max_weight,
                    "integer weights uniform in [1, W]; 0 writes an unweighted list")
        ->capture_default_str();
    gen->add_option("--seed", gen_opt.seed)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (maximize->parsed())
            return cmd_maximize(mx, in, out, err);
        if (evaluate->parsed())
            return cmd_evaluate(ev_input, ev_group, in, out);
        if (oracle->parsed())
            return cmd_oracle(or_input, or_k, in, out);
        return cmd_gen(gen_opt, out);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const WeightedGraphError &e) {
        err << "error: " << e.what() << '\n';
        return kExitWeighted;
    } catch (const OracleLimitError &e) {
        err << "error: " << e.what() << '\n';
        return kExitOracleCap;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace gclose
