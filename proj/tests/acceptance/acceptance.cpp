// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Thresholds are fixed here and never tuned to the results.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <gclose/generators.hpp>
#include <gclose/greedy.hpp>
#include <gclose/grow_shrink.hpp>
#include <gclose/local_swaps.hpp>
#include <gclose/objective.hpp>
#include <gclose/reach.hpp>
#include <gclose/sssp.hpp>

#include "support/oracles.hpp"

using namespace gclose;

namespace {

using Clock = std::chrono::steady_clock;
using Table = std::vector<std::vector<double>>;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

double geo_mean(const std::vector<double> &xs) {
    double s = 0;
    for (double x : xs)
        s += std::log(x);
    return std::exp(s / static_cast<double>(xs.size()));
}

// ---------------------------------------------------------------------------
// Small-graph corpus and table-based oracles (criteria 1-4).

struct Instance {
    Graph g;
    Table dist; // all pairs, from the relaxation oracle
};

std::vector<Instance> small_corpus() {
    std::vector<Instance> out;
    Rng rng(2024);
    std::uint64_t seed = 1;
    while (out.size() < 200) {
        const bool weighted = out.size() % 2;
        Graph g;
        if (out.size() % 4 < 2) {
            const std::size_t n = 16 + rng.below(49);
            g = largest_connected_component(gnp_graph(n, 3.0 / static_cast<double>(n), seed++)).graph;
            if (g.num_vertices() < 8)
                continue;
        } else {
            g = grid_graph(2 + rng.below(7), 4 + rng.below(5));
        }
        if (weighted)
            g = with_random_weights(g, 1, 10, seed++);
        auto dist = oracle::all_pairs(g);
        out.push_back({std::move(g), std::move(dist)});
    }
    return out;
}

std::vector<double> group_dist(const Table &t, std::span<const Vertex> group) {
    std::vector<double> d(t.size(), oracle::kInf);
    for (Vertex w : group)
        for (std::size_t x = 0; x < t.size(); ++x)
            d[x] = std::min(d[x], t[w][x]);
    return d;
}

double table_farness(const Table &t, std::span<const Vertex> group) {
    const auto d = group_dist(t, group);
    return std::accumulate(d.begin(), d.end(), 0.0);
}

bool same_farness(double got, double want, bool weighted) {
    if (!weighted)
        return got == want;
    return std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want));
}

// Brute-force sets of a Local-Swaps exchange (before the swap).
struct SwapSets {
    std::size_t h_minus = 0, h_plus = 0, lambda_u = 0, lambda_u_h_minus = 0, l_zero = 0;
};

SwapSets swap_sets(const Table &t, const std::vector<Vertex> &group, Vertex u, Vertex v) {
    std::vector<Vertex> after;
    for (Vertex w : group)
        after.push_back(w == u ? v : w);
    const auto before = group_dist(t, group);
    const auto now = group_dist(t, after);
    SwapSets s;
    for (std::size_t x = 0; x < t.size(); ++x) {
        s.h_minus += now[x] < before[x];
        s.h_plus += now[x] > before[x];
        if (before[x] == 0)
            continue;
        bool only_u = t[u][x] == before[x];
        for (Vertex w : group)
            if (w != u && t[w][x] == before[x])
                only_u = false;
        if (!only_u)
            continue;
        ++s.lambda_u;
        s.lambda_u_h_minus += now[x] < before[x];
        s.l_zero += t[v][x] == before[x];
    }
    return s;
}

// Grow-Shrink state against the table: d, d2 exact, representatives valid.
bool gs_state_ok(const GsState &s, const Table &t) {
    std::vector<Vertex> group(s.group().begin(), s.group().end());
    const std::size_t n = t.size();
    for (std::size_t x = 0; x < n; ++x) {
        double d = oracle::kInf, d2 = oracle::kInf;
        for (Vertex w : group) {
            if (t[w][x] < d) {
                d2 = d;
                d = t[w][x];
            } else if (t[w][x] < d2) {
                d2 = t[w][x];
            }
        }
        if (s.d()[x] != d || s.d2()[x] != d2 || s.d()[x] > s.d2()[x])
            return false;
        const Vertex r = s.r()[x];
        if (r >= n || !s.in_group(r) || t[r][x] != d)
            return false;
        if (group.size() >= 2) {
            const Vertex r2 = s.r2()[x];
            if (r2 >= n || !s.in_group(r2) || r2 == r || t[r2][x] != d2)
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

struct SmallRuns {
    std::size_t ls_runs = 0, gs_runs = 0;
    std::size_t farness_checks = 0, farness_bad = 0;
    std::size_t swaps = 0, swap_bad = 0;
    std::size_t shrinks = 0, shrink_bad = 0;
    double seconds = 0;
};

// Criteria 1, 3 and 4 share the same runs.
SmallRuns run_small_corpus(const std::vector<Instance> &corpus) {
    SmallRuns r;
    const auto start = Clock::now();
    for (const Instance &inst : corpus) {
        const Graph &g = inst.g;
        const Table &t = inst.dist;
        const bool weighted = g.weighted();
        for (std::size_t k = 1; k <= 3; ++k) {
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                if (!weighted) {
                    for (auto variant : {SwapVariant::base, SwapVariant::semi_local,
                                         SwapVariant::restricted}) {
                        LocalSwapOptions opt;
                        opt.variant = variant;
                        opt.seed = seed;
                        std::vector<Vertex> before;
                        Vertex su = 0, sv = 0;
                        LocalSwapObserver obs;
                        obs.before_swap = [&](const LsState &s, const SwapCandidate &c) {
                            before.assign(s.group().begin(), s.group().end());
                            su = c.u;
                            sv = c.v;
                        };
                        obs.after_swap = [&](const LsState &s, const SwapAccounting &acc) {
                            ++r.swaps;
                            const auto b = swap_sets(t, before, su, sv);
                            const bool ok =
                                acc.h_minus == b.h_minus && acc.h_plus == b.h_plus
                                && acc.lambda_u == b.lambda_u
                                && acc.lambda_u_h_minus == b.lambda_u_h_minus
                                && acc.l_zero == b.l_zero
                                && acc.h_plus == acc.lambda_u - acc.lambda_u_h_minus - acc.l_zero + 1
                                && acc.delta == static_cast<std::int64_t>(b.h_minus)
                                                    - static_cast<std::int64_t>(b.h_plus);
                            r.swap_bad += !ok;
                            ++r.farness_checks;
                            r.farness_bad += s.farness() != table_farness(t, s.group());
                        };
                        const auto res = local_swaps(g, k, opt, obs);
                        ++r.ls_runs;
                        ++r.farness_checks;
                        r.farness_bad += res.farness != table_farness(t, res.group);
                    }
                }
                for (auto variant : {GrowShrinkVariant::gs, GrowShrinkVariant::local,
                                     GrowShrinkVariant::extended}) {
                    GrowShrinkOptions opt;
                    opt.variant = variant;
                    opt.seed = seed;
                    GrowShrinkObserver obs;
                    obs.after_grow = [&](const GsState &s, const GrowStep &) {
                        ++r.farness_checks;
                        r.farness_bad +=
                            !same_farness(s.farness(), table_farness(t, s.group()), weighted);
                    };
                    obs.after_shrink = [&](const GsState &s, const ShrinkStep &) {
                        ++r.shrinks;
                        r.shrink_bad += !gs_state_ok(s, t);
                        ++r.farness_checks;
                        r.farness_bad +=
                            !same_farness(s.farness(), table_farness(t, s.group()), weighted);
                    };
                    const auto res = grow_shrink(g, k, opt, obs);
                    ++r.gs_runs;
                    ++r.farness_checks;
                    r.farness_bad +=
                        !same_farness(res.farness, table_farness(t, res.group), weighted);
                }
            }
        }
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

Outcome criterion1(const SmallRuns &r, std::size_t graphs) {
    Outcome o;
    o.pass = graphs >= 200 && r.farness_bad == 0 && r.seconds < 60;
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(r.ls_runs) + " ls and "
               + std::to_string(r.gs_runs) + " gs runs, " + std::to_string(r.farness_bad) + "/"
               + std::to_string(r.farness_checks) + " farness mismatches, "
               + fmt("%.1f s (limit 60 s)", r.seconds);
    return o;
}

Outcome criterion2(const std::vector<Instance> &corpus) {
    std::size_t checked = 0, equal_cases = 0, bad = 0;
    for (const Instance &inst : corpus) {
        if (inst.g.weighted())
            continue;
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                Rng rng(seed * 131 + k);
                const auto group = rng.sample(inst.g.num_vertices(), k);
                const auto dist = group_dist(inst.dist, group);
                const auto sets = oracle::reach_sets(inst.g, group);
                const double f = table_farness(inst.dist, group);
                for (Vertex v = 0; v < inst.g.num_vertices(); ++v) {
                    if (dist[v] == 0)
                        continue;
                    auto with = group;
                    with.push_back(v);
                    const double actual = delta_minus_exact(inst.g, group, v);
                    const double bound = static_cast<double>(sets[v].size()) * dist[v];
                    ++checked;
                    bad += actual != f - table_farness(inst.dist, with);
                    bad += actual < bound;
                    if (dist[v] == 1) {
                        ++equal_cases;
                        bad += actual != bound;
                    }
                }
            }
    }
    return {bad == 0, std::to_string(checked) + " vertices checked (" + std::to_string(equal_cases)
                          + " group neighbors with equality), " + std::to_string(bad)
                          + " violations"};
}

Outcome criterion3(const SmallRuns &r) {
    return {r.swap_bad == 0 && r.swaps > 0,
            std::to_string(r.swaps) + " evaluated swaps, " + std::to_string(r.swap_bad)
                + " accounting mismatches against brute-force sets"};
}

Outcome criterion4(const SmallRuns &r) {
    const Graph p5 = oracle::path(5);
    GsState s(p5, std::vector<Vertex>{0, 2, 4});
    s.remove(2);
    const std::vector<double> want_d2{4, 3, 2, 3, 4};
    const std::vector<Vertex> want_r2{4, 4, 4, 0, 0};
    const bool pinned = std::equal(s.d2().begin(), s.d2().end(), want_d2.begin())
                        && std::equal(s.r2().begin(), s.r2().end(), want_r2.begin());
    return {r.shrink_bad == 0 && r.shrinks > 0 && pinned,
            std::to_string(r.shrinks) + " shrinks, " + std::to_string(r.shrink_bad)
                + " repair mismatches; P5 pinned trace " + (pinned ? "ok" : "WRONG")};
}

// ---------------------------------------------------------------------------

Graph estimator_graph(std::size_t i, std::uint64_t seed) {
    switch (i % 3) {
    case 0:
        return random_connected_graph(1024, 512, seed);
    case 1:
        return preferential_attachment_graph(1024, 2, seed);
    default:
        return grid_graph(32, 32);
    }
}

Outcome criterion5() {
    const auto start = Clock::now();
    const ReachParams params{16, 16};
    double err_sum = 0;
    for (std::size_t i = 0; i < 50; ++i) {
        const Graph g = estimator_graph(i, 1000 + i);
        Rng rng(5000 + i);
        const auto dag = build_group_dag(g, rng.sample(g.num_vertices(), 10));
        const auto exact = exact_reach_sizes(dag);
        const auto est = estimate_reach_sizes(dag, params, rng.next());
        double err = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            err += std::abs(est[v] - static_cast<double>(exact[v])) / static_cast<double>(exact[v]);
        err_sum += err / static_cast<double>(g.num_vertices());
    }
    const double mean_err = err_sum / 50;

    std::size_t hits = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        const Graph g = estimator_graph(i, 2000 + i);
        Rng rng(7000 + i);
        const auto dag = build_group_dag(g, rng.sample(g.num_vertices(), 10));
        const auto exact = exact_reach_sizes(dag);
        const auto est = estimate_reach_sizes(dag, params, rng.next());
        const auto &dist = dag.dist();
        // Grids tie at the top, so any vertex attaining the exact maximum counts.
        double best = 0;
        std::vector<Vertex> cand;
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            if (dist[v] == 0)
                continue;
            cand.push_back(v);
            best = std::max(best, static_cast<double>(exact[v]) * dist[v]);
        }
        std::partial_sort(cand.begin(), cand.begin() + 3, cand.end(), [&](Vertex a, Vertex b) {
            const double sa = est[a] * dist[a], sb = est[b] * dist[b];
            return sa != sb ? sa > sb : a < b;
        });
        hits += std::any_of(cand.begin(), cand.begin() + 3, [&](Vertex v) {
            return static_cast<double>(exact[v]) * dist[v] == best;
        });
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {mean_err <= 0.5 && hits >= 80 && secs < 60,
            "mean relative error " + fmt("%.3f", mean_err) + " (limit 0.5), true argmax in top-3 in "
                + std::to_string(hits) + "/100 runs (limit 80), " + fmt("%.1f s", secs)};
}

Outcome criterion6() {
    std::vector<double> ratios;
    double worst = 1;
    Rng rng(66);
    while (ratios.size() < 120) {
        const std::size_t n = 6 + rng.below(9);
        const auto g = largest_connected_component(
                           gnp_graph(n, 0.15 + 0.35 * rng.unit(), rng.next()))
                           .graph;
        if (g.num_vertices() < 5)
            continue;
        const std::size_t k = 1 + rng.below(3);
        const auto opt = oracle::optimum(g, k);
        const double greedy_f = greedy_group(g, k).trace.back();
        const double ratio = opt.farness / greedy_f; // closeness ratio greedy / optimum
        ratios.push_back(ratio);
        worst = std::min(worst, ratio);
    }
    const double gm = geo_mean(ratios);
    return {gm >= 0.95, std::to_string(ratios.size()) + " graphs (n <= 14, k <= 3), geometric-mean "
                            "closeness ratio " + fmt("%.4f", gm) + " (limit 0.95), worst "
                            + fmt("%.3f", worst)};
}

// ---------------------------------------------------------------------------
// Desk-scale suites (criteria 7-9).

struct Named {
    std::string name;
    Graph g;
};

std::vector<Named> unweighted_suite() {
    return {{"grid 64x64", grid_graph(64, 64)},
            {"grid 32x128", grid_graph(32, 128)},
            {"pa 4096 m=2", preferential_attachment_graph(4096, 2, 1)},
            {"pa 4096 m=4", preferential_attachment_graph(4096, 4, 2)}};
}

// Grid with a fraction of edges removed plus sparse diagonal shortcuts,
// restricted to its largest component.
Graph road_like(std::size_t rows, std::size_t cols, double drop, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    auto id = [cols](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * cols + j); };
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (j + 1 < cols && rng.unit() >= drop)
                edges.push_back({id(i, j), id(i, j + 1)});
            if (i + 1 < rows && rng.unit() >= drop)
                edges.push_back({id(i, j), id(i + 1, j)});
            if (i + 1 < rows && j + 1 < cols && rng.unit() < 0.05)
                edges.push_back({id(i, j), id(i + 1, j + 1)});
        }
    return largest_connected_component(Graph::from_edges(rows * cols, edges, false)).graph;
}

std::vector<Named> weighted_suite() {
    return {{"grid 64x64", with_random_weights(grid_graph(64, 64), 1, 10, 11)},
            {"grid 32x128", with_random_weights(grid_graph(32, 128), 1, 10, 12)},
            {"road-like 66x66", with_random_weights(road_like(66, 66, 0.15, 13), 1, 10, 14)},
            {"road-like 48x96", with_random_weights(road_like(48, 96, 0.2, 15), 1, 10, 16)}};
}

double run_algo(const Graph &g, const std::string &algo, std::size_t k, std::uint64_t seed,
                std::size_t max_exchanges = 100) {
    if (algo == "greedy")
        return greedy_group(g, k).trace.back();
    if (algo.rfind("ls", 0) == 0) {
        LocalSwapOptions opt;
        opt.variant = algo == "ls" ? SwapVariant::base : SwapVariant::restricted;
        opt.seed = seed;
        opt.max_exchanges = max_exchanges;
        return local_swaps(g, k, opt).farness;
    }
    GrowShrinkOptions opt;
    opt.variant = algo == "gs"         ? GrowShrinkVariant::gs
                  : algo == "gs-local" ? GrowShrinkVariant::local
                                       : GrowShrinkVariant::extended;
    opt.seed = seed;
    opt.max_exchanges = max_exchanges;
    return grow_shrink(g, k, opt).farness;
}

Outcome criterion7() {
    const auto start = Clock::now();
    const std::size_t k = 10;
    std::vector<double> ext_ratios;
    std::size_t order_failures = 0;
    std::string per_graph;
    for (const auto &[name, g] : unweighted_suite()) {
        const double greedy_f = run_algo(g, "greedy", k, 0);
        std::vector<double> ext, gsl, ls, lsr;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            ext.push_back(greedy_f / run_algo(g, "gs-extended", k, seed));
            gsl.push_back(greedy_f / run_algo(g, "gs-local", k, seed));
            ls.push_back(greedy_f / run_algo(g, "ls", k, seed));
            lsr.push_back(greedy_f / run_algo(g, "ls-restrict", k, seed));
        }
        ext_ratios.insert(ext_ratios.end(), ext.begin(), ext.end());
        const double a = geo_mean(gsl), b = geo_mean(ls), c = geo_mean(lsr);
        const bool ordered = a >= b && b >= c;
        order_failures += !ordered;
        per_graph += "; " + name + ": ext " + fmt("%.3f", geo_mean(ext)) + ", gs-local "
                     + fmt("%.3f", a) + ", ls " + fmt("%.3f", b) + ", ls-restrict "
                     + fmt("%.3f", c) + (ordered ? "" : " (order violated)");
    }
    const double gm = geo_mean(ext_ratios);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {gm >= 0.95 && order_failures <= 1,
            "gs-extended/greedy closeness " + fmt("%.4f", gm) + " (limit 0.95), ordering violated on "
                + std::to_string(order_failures) + "/4 graphs (limit 1)" + per_graph
                + fmt(", %.1f s", secs)};
}

Outcome criterion8() {
    const auto start = Clock::now();
    std::vector<double> ratios;
    std::string per_graph;
    for (const auto &[name, g] : weighted_suite()) {
        std::vector<double> mine;
        for (std::size_t k : {5, 10}) {
            const double greedy_f = run_algo(g, "greedy", k, 0);
            for (std::uint64_t seed = 1; seed <= 5; ++seed)
                mine.push_back(greedy_f / run_algo(g, "gs", k, seed));
        }
        ratios.insert(ratios.end(), mine.begin(), mine.end());
        per_graph += "; " + name + " (n=" + std::to_string(g.num_vertices()) + ") "
                     + fmt("%.4f", geo_mean(mine));
    }
    const double gm = geo_mean(ratios);
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {gm >= 0.98, "gs/greedy closeness " + fmt("%.4f", gm) + " (gate 0.98, target 1.00 "
                            + (gm >= 1.0 ? "met" : "not met") + ")" + per_graph
                            + fmt(", %.1f s", secs)};
}

Outcome criterion9() {
    const auto start = Clock::now();
    const std::size_t k = 10;
    const std::size_t unlimited = std::numeric_limits<std::size_t>::max();
    double worst = 0;
    std::size_t runs = 0, differing = 0;
    for (const auto &[name, g] : unweighted_suite())
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const double capped = run_algo(g, "gs-extended", k, seed, 100);
            const double free = run_algo(g, "gs-extended", k, seed, unlimited);
            // Closeness is n / farness.
            const double diff = std::abs(free / capped - 1.0);
            worst = std::max(worst, diff);
            differing += capped != free;
            ++runs;
        }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {worst < 0.01, std::to_string(runs) + " gs-extended runs, " + std::to_string(differing)
                              + " changed by the limit, largest closeness difference "
                              + fmt("%.4f%%", 100 * worst) + " (limit 1%)" + fmt(", %.1f s", secs)};
}

Outcome criterion10() {
    const auto start = Clock::now();
    std::vector<double> xs, ys;
    std::string points;
    for (int e = 13; e <= 17; ++e) {
        const std::size_t n = std::size_t{1} << e;
        const std::size_t rows = std::size_t{1} << (e / 2);
        const Graph g = grid_graph(rows, n / rows);
        GrowShrinkOptions opt;
        opt.variant = GrowShrinkVariant::extended;
        const auto t0 = Clock::now();
        const auto res = grow_shrink(g, 10, opt);
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(secs));
        points += "; 2^" + std::to_string(e) + ": h=" + std::to_string(grow_steps(g, 10, opt))
                  + ", " + std::to_string(res.exchanges) + " rounds, " + fmt("%.2f s", secs);
    }
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = sxy / sxx;
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    return {slope <= 1.25 && secs < 600, "log-log slope " + fmt("%.3f", slope) + " (limit 1.25)"
                                             + points + fmt(", total %.1f s", secs)};
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&](int id, const char *title, const Outcome &o) {
        std::printf("[%s] criterion %d, %s: %s\n", o.pass ? "PASS" : "FAIL", id, title,
                    o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    };

    const auto corpus = small_corpus();
    const auto small = run_small_corpus(corpus);
    report(1, "incremental state equals scratch farness", criterion1(small, corpus.size()));
    report(2, "reachability bound on farness decrease", criterion2(corpus));
    report(3, "swap accounting", criterion3(small));
    report(4, "shrink repair", criterion4(small));
    report(5, "reachability estimator statistics", criterion5());
    report(6, "greedy versus optimum", criterion6());
    report(7, "unweighted quality", criterion7());
    report(8, "weighted quality", criterion8());
    report(9, "exchange limit", criterion9());
    report(10, "scaling on grids", criterion10());

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
