#include <doctest.h>

#include <gclose/greedy.hpp>

#include "support/oracles.hpp"

using namespace gclose;

using G = std::vector<Vertex>;

TEST_SUITE("greedy") {

TEST_CASE("examples") {
    auto res = greedy_group(oracle::path(4), 1);
    CHECK(res.group == G{1});
    CHECK(res.trace == std::vector<double>{4});

    res = greedy_group(oracle::path(4), 2);
    CHECK(res.group == G{1, 2});
    CHECK(res.trace == std::vector<double>{4, 2});

    res = greedy_group(oracle::star(5), 2);
    CHECK(res.group == G{0, 1});
    CHECK(res.trace == std::vector<double>{4, 3});

    CHECK_THROWS_AS(greedy_group(oracle::path(4), 0), std::invalid_argument);
    CHECK_THROWS_AS(greedy_group(oracle::path(4), 4), std::invalid_argument);
    const Edge split[] = {{0, 1}, {2, 3}};
    CHECK_THROWS_AS(greedy_group(Graph::from_edges(4, split, false), 1), std::invalid_argument);
}

TEST_CASE("every step takes the best marginal gain and keeps exact distances") {
    Rng rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const bool weighted = trial % 2;
        const auto g = trial % 3 ? oracle::random_connected(30, 0.08, rng, weighted)
                                 : oracle::random_grid(5, 6, rng, weighted);
        const std::size_t k = 1 + rng.below(5);
        std::size_t calls = 0;
        const auto res = greedy_group(g, k, [&](std::span<const Vertex> group,
                                                const DistanceField &dist) {
            ++calls;
            CHECK(dist == oracle::distances(g, group));
        });
        CHECK(calls == k);
        REQUIRE(res.group.size() == k);
        REQUIRE(res.trace.size() == k);

        // Replay with the oracle: each pick is the lowest-id argmin of f(S + v).
        std::vector<Vertex> s;
        for (std::size_t i = 0; i < k; ++i) {
            double best = oracle::kInf;
            Vertex pick = kNoVertex;
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                if (std::find(s.begin(), s.end(), v) != s.end())
                    continue;
                auto t = s;
                t.push_back(v);
                const double f = oracle::farness(g, t);
                if (f < best) {
                    best = f;
                    pick = v;
                }
            }
            CHECK(res.group[i] == pick);
            CHECK(res.trace[i] == best);
            s.push_back(pick);
            if (i > 0)
                CHECK(res.trace[i] < res.trace[i - 1]);
        }
    }
}

} // TEST_SUITE
